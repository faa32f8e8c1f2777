#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "qturbo/bits.hpp"

namespace qturbo {

/// Single-qubit effective Pauli operator. The enumerator values fix the order
/// (I, X, Y, Z) used by every probability 4-vector in the library.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Binary couple (x | z << 1) of a single-qubit Pauli: I=0, X=1, Z=2, Y=3.
constexpr std::uint8_t to_xz(Pauli p) {
  constexpr std::array<std::uint8_t, 4> table{0, 1, 3, 2};
  return table[static_cast<std::size_t>(p)];
}

constexpr Pauli from_xz(std::uint64_t xz) {
  constexpr std::array<Pauli, 4> table{Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
  return table[xz & 3U];
}

char pauli_char(Pauli p);

/// Element of the effective Pauli group G_n. Qubit j occupies bits 2j (x) and 2j+1 (z)
/// of the underlying bit vector, so the symplectic form is a swap within each pair.
/// Group addition is XOR.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t num_qubits) : bits_(2 * num_qubits) {}
  explicit PauliString(BitVector bits);

  /// Parses "IXYZ"; '_' also denotes I and ':' is ignored as a visual separator.
  static PauliString parse(std::string_view text);
  /// Builds an n-qubit string from the low 2n bits of a packed word (n <= 32).
  static PauliString from_packed(std::size_t num_qubits, std::uint64_t packed);

  std::size_t num_qubits() const { return bits_.size() / 2; }
  const BitVector& bits() const { return bits_; }
  BitVector& bits() { return bits_; }

  Pauli operator[](std::size_t j) const { return from_xz(bits_.read(2 * j, 2)); }
  void set(std::size_t j, Pauli p) { bits_.write(2 * j, 2, to_xz(p)); }

  /// Packed (x,z) bits of qubits [first, first+count), count <= 32.
  std::uint64_t packed(std::size_t first, std::size_t count) const {
    return bits_.read(2 * first, 2 * count);
  }
  void write_packed(std::size_t first, std::size_t count, std::uint64_t value) {
    bits_.write(2 * first, 2 * count, value);
  }

  PauliString slice(std::size_t first, std::size_t count) const;
  void assign(std::size_t first, const PauliString& part);
  /// Concatenation (P : Q).
  PauliString join(const PauliString& tail) const;

  PauliString& operator+=(const PauliString& other);
  friend PauliString operator+(PauliString a, const PauliString& b) { return a += b; }

  std::size_t weight() const;
  bool is_identity() const { return !bits_.any(); }
  /// Unique decomposition P = P^x + P^z with P^x in {I,X}^n and P^z in {I,Z}^n.
  std::pair<PauliString, PauliString> xz_split() const;

  std::string str() const;

  bool operator==(const PauliString&) const = default;
  auto operator<=>(const PauliString& other) const { return bits_ <=> other.bits_; }

 private:
  BitVector bits_;
};

/// Symplectic inner product P Lambda_n Q^T; zero iff the operators commute.
bool star(const PauliString& p, const PauliString& q);

/// Helpers on packed Pauli words (2 bits per qubit, at most 32 qubits).
namespace packed {

inline constexpr std::uint64_t kXMask = 0x5555555555555555ULL;

constexpr std::uint64_t swap_pairs(std::uint64_t v) {
  return ((v >> 1) & kXMask) | ((v & kXMask) << 1);
}

constexpr int weight(std::uint64_t v) { return std::popcount((v | (v >> 1)) & kXMask); }

constexpr bool star(std::uint64_t a, std::uint64_t b) {
  return (std::popcount(a & swap_pairs(b)) & 1) != 0;
}

constexpr std::uint64_t x_part(std::uint64_t v) { return v & kXMask; }

constexpr Pauli at(std::uint64_t v, std::size_t j) { return from_xz(v >> (2 * j)); }

constexpr std::uint64_t mask(std::size_t num_qubits) {
  return num_qubits >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * num_qubits)) - 1;
}

}  // namespace packed

}  // namespace qturbo
