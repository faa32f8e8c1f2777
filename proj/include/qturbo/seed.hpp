#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qturbo/symplectic.hpp"

namespace qturbo {

/// Seed transformation of a quantum convolutional encoder: a symplectic U on n+m
/// qubits. Internally inputs are ordered (M : L : S) -- m memory, k logical, n-k
/// stabilizer qubits -- and outputs (P : M') -- n physical, m memory qubits.
///
/// Row blocks (2m | 2k | 2(n-k)) are mu, Lambda, Omega; column blocks (2n | 2m)
/// are the physical and memory parts.
class SeedTransformation {
 public:
  SeedTransformation(std::size_t n, std::size_t k, std::size_t m, SymplecticMatrix u);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  std::size_t width() const { return n_ + m_; }
  const SymplecticMatrix& matrix() const { return u_; }

  /// (M : L : S) U as packed words, bit layout identical to PauliString.
  std::uint64_t apply(std::uint64_t input) const { return forward_.apply(input); }
  std::uint64_t apply_inverse(std::uint64_t output) const { return inverse_.apply(output); }

  std::uint64_t pack_input(std::uint64_t memory, std::uint64_t logical,
                           std::uint64_t stabilizer) const {
    return memory | (logical << (2 * m_)) | (stabilizer << (2 * (m_ + k_)));
  }
  std::uint64_t physical_part(std::uint64_t output) const { return output & packed::mask(n_); }
  std::uint64_t memory_part(std::uint64_t output) const { return output >> (2 * n_); }

  BinaryMatrix mu_physical() const { return u_.matrix().block(0, 2 * m_, 0, 2 * n_); }
  BinaryMatrix mu_memory() const { return u_.matrix().block(0, 2 * m_, 2 * n_, 2 * m_); }
  BinaryMatrix lambda_physical() const { return u_.matrix().block(2 * m_, 2 * k_, 0, 2 * n_); }
  BinaryMatrix lambda_memory() const { return u_.matrix().block(2 * m_, 2 * k_, 2 * n_, 2 * m_); }
  /// Rows giving the action of the Z_i stabilizer inputs (every second Omega row).
  BinaryMatrix sigma_physical() const;
  BinaryMatrix sigma_memory() const;
  /// Effective seed: rows mu, Lambda, Sigma stacked ((2m + 2k + (n-k)) x 2(n+m)).
  BinaryMatrix effective() const;

  bool operator==(const SeedTransformation& other) const {
    return n_ == other.n_ && k_ == other.k_ && m_ == other.m_ && u_ == other.u_;
  }

 private:
  /// Byte-sliced lookup tables for v -> v A with at most 64 input and output bits.
  class PackedMap {
   public:
    PackedMap() = default;
    explicit PackedMap(const BinaryMatrix& a);
    std::uint64_t apply(std::uint64_t v) const {
      std::uint64_t out = 0;
      for (std::size_t c = 0; c < tables_.size(); ++c) {
        out ^= tables_[c][(v >> (8 * c)) & 0xFFU];
      }
      return out;
    }

   private:
    std::vector<std::array<std::uint64_t, 256>> tables_;
  };

  BinaryMatrix sigma_rows() const;

  std::size_t n_, k_, m_;
  SymplecticMatrix u_;
  PackedMap forward_;
  PackedMap inverse_;
};

/// Row/column order of integer-row seed listings.
///  - MemoryLast: rows ordered by input qubit (L : S : M), columns by output
///    qubit (M' : P). This is the layout of the published seed listings.
///  - MemoryFirst: the internal order, rows (M : L : S) and columns (P : M').
/// In both layouts each qubit contributes an (x, z) bit pair, and each row is the
/// integer whose binary expansion, most significant bit first, spans 2(n+m) columns.
enum class SeedLayout { MemoryLast, MemoryFirst };

SeedLayout parse_layout(const std::string& name);
std::string layout_name(SeedLayout layout);

SeedTransformation seed_from_rows(std::size_t n, std::size_t k, std::size_t m,
                                  const std::vector<std::uint64_t>& rows,
                                  SeedLayout layout = SeedLayout::MemoryLast);
std::vector<std::uint64_t> seed_to_rows(const SeedTransformation& seed,
                                        SeedLayout layout = SeedLayout::MemoryLast);

/// Seed file: JSON object {"n", "k", "m", "rows": [...], "layout"?: "memory-last"}.
SeedTransformation load_seed(const std::string& text);
SeedTransformation load_seed_file(const std::filesystem::path& path);
std::string store_seed(const SeedTransformation& seed,
                       SeedLayout layout = SeedLayout::MemoryLast);

}  // namespace qturbo
