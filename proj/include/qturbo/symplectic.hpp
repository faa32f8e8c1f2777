#pragma once

#include <cstddef>
#include <vector>

#include "qturbo/bits.hpp"
#include "qturbo/pauli.hpp"
#include "qturbo/rng.hpp"

namespace qturbo {

/// 2n x 2n binary matrix U with U Lambda_n U^T = Lambda_n. Row 2j is the image
/// of X_j and row 2j+1 the image of Z_j (0-based), so apply(P) = P U.
class SymplecticMatrix {
 public:
  /// Validates the symplectic condition; throws ValidationError otherwise.
  explicit SymplecticMatrix(BinaryMatrix matrix);

  static SymplecticMatrix identity(std::size_t num_qubits);
  /// Rows given as Pauli images in the order X_1, Z_1, X_2, Z_2, ...
  static SymplecticMatrix from_images(const std::vector<PauliString>& images);

  static bool is_symplectic(const BinaryMatrix& matrix);

  std::size_t num_qubits() const { return matrix_.rows() / 2; }
  const BinaryMatrix& matrix() const { return matrix_; }
  PauliString row(std::size_t i) const { return PauliString(matrix_.row(i)); }
  PauliString image_of_x(std::size_t qubit) const { return row(2 * qubit); }
  PauliString image_of_z(std::size_t qubit) const { return row(2 * qubit + 1); }

  PauliString apply(const PauliString& p) const;
  /// U^{-1} = Lambda_n U^T Lambda_n.
  SymplecticMatrix inverse() const;
  /// Matrix product; P (A * B) = (P A) B.
  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

  bool operator==(const SymplecticMatrix&) const = default;

 private:
  struct Trusted {};
  SymplecticMatrix(BinaryMatrix matrix, Trusted) : matrix_(std::move(matrix)) {}

  BinaryMatrix matrix_;
};

/// Random element of Sp(2n, F_2): a product of 20 n^2 random elementary
/// operations (symplectic transvections and qubit swaps) applied to the identity.
SymplecticMatrix random_symplectic(std::size_t num_qubits, Rng& rng);

/// Linear subspace of F_2^d kept in reduced row echelon form, so two
/// subspaces are equal iff their bases compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_bits) : ambient_(ambient_bits) {}
  static Subspace span(std::size_t ambient_bits, const std::vector<BitVector>& generators);
  static Subspace full(std::size_t ambient_bits);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }

  /// Adds a vector; returns true if the dimension grew.
  bool insert(const BitVector& v);
  bool contains(const BitVector& v) const;
  bool contains(const Subspace& other) const;

  /// Complement under the symplectic form (ambient must be even): all v with
  /// star(v, b) = 0 for every b in the subspace.
  Subspace orthogonal_complement() const;
  Subspace operator+(const Subspace& other) const;
  /// { v A : v in this }.
  Subspace image(const BinaryMatrix& a) const;
  /// All 2^dim elements; dimension must be small.
  std::vector<BitVector> elements() const;

  bool operator==(const Subspace&) const = default;

 private:
  BitVector reduce(BitVector v) const;

  std::size_t ambient_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qturbo
