#include "qturbo/symplectic.hpp"

#include <algorithm>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

BitVector swap_pairs(const BitVector& v) {
  BitVector out = v;
  for (auto& w : out.words()) {
    w = packed::swap_pairs(w);
  }
  return out;
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(BinaryMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() % 2 != 0) {
    throw DimensionError("symplectic matrix must be 2n x 2n");
  }
  if (!is_symplectic(matrix_)) {
    throw ValidationError("matrix does not satisfy U Lambda U^T = Lambda");
  }
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t num_qubits) {
  return SymplecticMatrix(BinaryMatrix::identity(2 * num_qubits), Trusted{});
}

SymplecticMatrix SymplecticMatrix::from_images(const std::vector<PauliString>& images) {
  std::vector<BitVector> rows;
  rows.reserve(images.size());
  for (const auto& p : images) {
    if (p.num_qubits() * 2 != images.size()) {
      throw DimensionError("need 2n images of n-qubit Pauli strings");
    }
    rows.push_back(p.bits());
  }
  return SymplecticMatrix(BinaryMatrix(std::move(rows), images.size()));
}

bool SymplecticMatrix::is_symplectic(const BinaryMatrix& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() % 2 != 0) {
    return false;
  }
  const std::size_t size = matrix.rows();
  std::vector<BitVector> swapped;
  swapped.reserve(size);
  for (std::size_t j = 0; j < size; ++j) {
    swapped.push_back(swap_pairs(matrix.row(j)));
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      const bool expected = (i / 2 == j / 2) && i != j;
      if (matrix.row(i).dot(swapped[j]) != expected) {
        return false;
      }
    }
  }
  return true;
}

PauliString SymplecticMatrix::apply(const PauliString& p) const {
  if (p.num_qubits() != num_qubits()) {
    throw DimensionError("Pauli string and symplectic matrix sizes differ");
  }
  return PauliString(matrix_.left_multiply(p.bits()));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // (Lambda U^T Lambda)_{ij} = U_{swap(j), swap(i)}.
  const std::size_t size = matrix_.rows();
  BinaryMatrix inv(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (matrix_.get(j ^ 1U, i ^ 1U)) {
        inv.set(i, j, true);
      }
    }
  }
  return SymplecticMatrix(std::move(inv), Trusted{});
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  return SymplecticMatrix(matrix_ * rhs.matrix_, Trusted{});
}

SymplecticMatrix random_symplectic(std::size_t num_qubits, Rng& rng) {
  const std::size_t size = 2 * num_qubits;
  BinaryMatrix m = BinaryMatrix::identity(size);
  if (num_qubits == 0) {
    return SymplecticMatrix(std::move(m));
  }
  const std::size_t steps = 20 * num_qubits * num_qubits;
  for (std::size_t s = 0; s < steps; ++s) {
    if (num_qubits > 1 && rng.below(4) == 0) {
      // Swap two qubits: permute column pairs.
      const std::size_t a = rng.below(num_qubits);
      const std::size_t b = rng.below(num_qubits);
      if (a == b) {
        continue;
      }
      for (std::size_t r = 0; r < size; ++r) {
        BitVector& row = m.row(r);
        const bool xa = row.get(2 * a), za = row.get(2 * a + 1);
        row.set(2 * a, row.get(2 * b));
        row.set(2 * a + 1, row.get(2 * b + 1));
        row.set(2 * b, xa);
        row.set(2 * b + 1, za);
      }
    } else {
      // Transvection T_v : x -> x + (x * v) v.
      BitVector v(size);
      for (std::size_t i = 0; i < size; ++i) {
        v.set(i, rng.coin());
      }
      if (!v.any()) {
        continue;
      }
      const BitVector sv = swap_pairs(v);
      for (std::size_t r = 0; r < size; ++r) {
        if (m.row(r).dot(sv)) {
          m.row(r) ^= v;
        }
      }
    }
  }
  return SymplecticMatrix(std::move(m));
}

Subspace Subspace::span(std::size_t ambient_bits, const std::vector<BitVector>& generators) {
  Subspace s(ambient_bits);
  for (const auto& g : generators) {
    s.insert(g);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_bits) {
  Subspace s(ambient_bits);
  for (std::size_t i = 0; i < ambient_bits; ++i) {
    s.insert(BitVector::unit(ambient_bits, i));
  }
  return s;
}

BitVector Subspace::reduce(BitVector v) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (v.get(pivots_[r])) {
      v ^= basis_[r];
    }
  }
  return v;
}

bool Subspace::insert(const BitVector& v) {
  if (v.size() != ambient_) {
    throw DimensionError("vector does not live in the subspace's ambient space");
  }
  BitVector r = reduce(v);
  if (!r.any()) {
    return false;
  }
  basis_.push_back(std::move(r));
  pivots_ = reduce_rows(basis_);
  return true;
}

bool Subspace::contains(const BitVector& v) const {
  if (v.size() != ambient_) {
    throw DimensionError("vector does not live in the subspace's ambient space");
  }
  return !reduce(v).any();
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const BitVector& b) { return contains(b); });
}

Subspace Subspace::orthogonal_complement() const {
  if (ambient_ % 2 != 0) {
    throw DimensionError("symplectic complement needs an even ambient dimension");
  }
  // v * b = v . swap(b) = 0 for all basis b: left null space of the matrix whose
  // columns are swap(b).
  BinaryMatrix cols(ambient_, basis_.size());
  for (std::size_t c = 0; c < basis_.size(); ++c) {
    const BitVector sb = swap_pairs(basis_[c]);
    for (std::size_t r = 0; r < ambient_; ++r) {
      if (sb.get(r)) {
        cols.set(r, c, true);
      }
    }
  }
  if (basis_.empty()) {
    return full(ambient_);
  }
  return span(ambient_, cols.left_null_space());
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw DimensionError("subspaces live in different ambient spaces");
  }
  Subspace s = *this;
  for (const auto& b : other.basis_) {
    s.insert(b);
  }
  return s;
}

Subspace Subspace::image(const BinaryMatrix& a) const {
  if (a.rows() != ambient_) {
    throw DimensionError("matrix row count differs from ambient dimension");
  }
  Subspace s(a.cols());
  for (const auto& b : basis_) {
    s.insert(a.left_multiply(b));
  }
  return s;
}

std::vector<BitVector> Subspace::elements() const {
  if (basis_.size() > 24) {
    throw BudgetError("subspace too large to enumerate");
  }
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << basis_.size());
  out.emplace_back(ambient_);
  for (const auto& b : basis_) {
    const std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(out[i] ^ b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qturbo
