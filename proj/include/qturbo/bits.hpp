#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qturbo {

/// Fixed-length vector over GF(2), packed little-endian into 64-bit words.
/// Bit i lives in word i / 64 at position i % 64; padding bits are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t num_bits);

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector parse(std::string_view text);
  static BitVector unit(std::size_t num_bits, std::size_t index);

  std::size_t size() const { return num_bits_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  /// Reads `count` <= 64 consecutive bits starting at `offset`.
  std::uint64_t read(std::size_t offset, std::size_t count) const;
  /// Overwrites `count` <= 64 consecutive bits starting at `offset`.
  void write(std::size_t offset, std::size_t count, std::uint64_t value);

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool any() const;
  std::size_t popcount() const;
  /// Parity of the bitwise AND, i.e. the ordinary GF(2) dot product.
  bool dot(const BitVector& other) const;
  /// Lowest set bit, or size() if the vector is zero.
  std::size_t first_one() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::string str() const;

  bool operator==(const BitVector&) const = default;
  std::strong_ordering operator<=>(const BitVector& other) const;

 private:
  std::size_t num_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense binary matrix stored as packed rows. Vectors act on the left: v * A.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  BinaryMatrix(std::vector<BitVector> rows, std::size_t cols);

  static BinaryMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVector>& row_vectors() const { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }

  /// v * A; requires v.size() == rows().
  BitVector left_multiply(const BitVector& v) const;
  BinaryMatrix operator*(const BinaryMatrix& rhs) const;
  BinaryMatrix transpose() const;
  BinaryMatrix block(std::size_t row0, std::size_t num_rows, std::size_t col0,
                     std::size_t num_cols) const;

  std::size_t rank() const;
  /// Basis of {v : v * A = 0}.
  std::vector<BitVector> left_null_space() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

/// Reduced row echelon form in place; pivots are the lowest set bit of each row and
/// rows are sorted by pivot. Zero rows are dropped. Returns the pivot columns.
std::vector<std::size_t> reduce_rows(std::vector<BitVector>& rows);

}  // namespace qturbo
