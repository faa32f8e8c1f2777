#include "qturbo/bits.hpp"

#include <algorithm>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

std::uint64_t low_mask(std::size_t count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

}  // namespace

BitVector::BitVector(std::size_t num_bits) : num_bits_(num_bits), words_(word_count(num_bits), 0) {}

BitVector BitVector::parse(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i, true);
    } else if (text[i] != '0') {
      throw ValidationError("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t num_bits, std::size_t index) {
  BitVector v(num_bits);
  v.set(index, true);
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::uint64_t BitVector::read(std::size_t offset, std::size_t count) const {
  if (count == 0) {
    return 0;
  }
  const std::size_t w = offset >> 6;
  const std::size_t shift = offset & 63;
  std::uint64_t value = words_[w] >> shift;
  if (shift != 0 && shift + count > 64) {
    value |= words_[w + 1] << (64 - shift);
  }
  return value & low_mask(count);
}

void BitVector::write(std::size_t offset, std::size_t count, std::uint64_t value) {
  if (count == 0) {
    return;
  }
  value &= low_mask(count);
  const std::size_t w = offset >> 6;
  const std::size_t shift = offset & 63;
  const std::uint64_t mask = low_mask(count);
  words_[w] = (words_[w] & ~(mask << shift)) | (value << shift);
  if (shift != 0 && shift + count > 64) {
    const std::size_t spill = 64 - shift;
    words_[w + 1] = (words_[w + 1] & ~(mask >> spill)) | (value >> spill);
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.num_bits_ != num_bits_) {
    throw DimensionError("bit vector length mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.num_bits_ != num_bits_) {
    throw DimensionError("bit vector length mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::first_one() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return num_bits_;
}

std::string BitVector::str() const {
  std::string out(num_bits_, '0');
  for (std::size_t i = 0; i < num_bits_; ++i) {
    if (get(i)) {
      out[i] = '1';
    }
  }
  return out;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
  if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
    return c;
  }
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, BitVector(cols)), cols_(cols) {}

BinaryMatrix::BinaryMatrix(std::vector<BitVector> rows, std::size_t cols)
    : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) {
      throw DimensionError("matrix row has wrong width");
    }
  }
}

BinaryMatrix BinaryMatrix::identity(std::size_t size) {
  BinaryMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    m.set(i, i, true);
  }
  return m;
}

BitVector BinaryMatrix::left_multiply(const BitVector& v) const {
  if (v.size() != rows_.size()) {
    throw DimensionError("vector length does not match matrix row count");
  }
  BitVector out(cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(i)) {
      out ^= rows_[i];
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix& rhs) const {
  if (cols_ != rhs.rows()) {
    throw DimensionError("matrix product dimension mismatch");
  }
  BinaryMatrix out(rows_.size(), rhs.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out.rows_[i] = rhs.left_multiply(rows_[i]);
  }
  return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix out(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) {
        out.set(c, r, true);
      }
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::block(std::size_t row0, std::size_t num_rows, std::size_t col0,
                                 std::size_t num_cols) const {
  if (row0 + num_rows > rows_.size() || col0 + num_cols > cols_) {
    throw DimensionError("block exceeds matrix bounds");
  }
  BinaryMatrix out(num_rows, num_cols);
  for (std::size_t r = 0; r < num_rows; ++r) {
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (get(row0 + r, col0 + c)) {
        out.set(r, c, true);
      }
    }
  }
  return out;
}

std::size_t BinaryMatrix::rank() const {
  auto copy = rows_;
  return reduce_rows(copy).size();
}

std::vector<BitVector> BinaryMatrix::left_null_space() const {
  // v * A = 0  <=>  A^T v^T = 0: solve on the transpose's right null space.
  auto eqs = transpose().rows_;
  const std::size_t n = rows_.size();
  auto pivots = reduce_rows(eqs);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    BitVector v(n);
    v.set(free, true);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      if (eqs[r].get(free)) {
        v.set(pivots[r], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> reduce_rows(std::vector<BitVector>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].get(col)) {
      ++sel;
    }
    if (sel == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) {
        rows[r] ^= rows[rank];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace qturbo
