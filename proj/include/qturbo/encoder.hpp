#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qturbo/bits.hpp"
#include "qturbo/pauli.hpp"
#include "qturbo/seed.hpp"

namespace qturbo {

/// Result of running an encoder backwards on a physical Pauli stream.
struct InverseEncoding {
  /// Input stream (S_0 : L_1 : S_1 : ... : L_N : S_N : S_{N+1} : ... : S_{N+t}).
  PauliString input;
  /// Packed memory states M_0 .. M_{N+t}; M_0 = S_0, M_{N+t} = last m physical qubits.
  std::vector<std::uint64_t> memory;
};

/// Quantum convolutional encoder: the seed applied N + t times, shifted by n qubits
/// each time. Physical and input streams both have n(N+t) + m qubits.
///
/// Input stream layout: S_0 on qubits [0, m); slice i (1-based) on
/// [m + (i-1)n, m + in), holding (L_i : S_i) for i <= N and S_i (n qubits) for i > N.
/// Physical layout: P_i on [(i-1)n, in) with the last slice extended by the m
/// final memory qubits.
class ConvEncoder {
 public:
  ConvEncoder(SeedTransformation seed, std::size_t duration, std::size_t termination);

  const SeedTransformation& seed() const { return seed_; }
  std::size_t duration() const { return duration_; }
  std::size_t termination() const { return termination_; }
  std::size_t slices() const { return duration_ + termination_; }

  std::size_t num_physical() const { return seed_.n() * slices() + seed_.m(); }
  std::size_t num_logical() const { return seed_.k() * duration_; }
  std::size_t num_syndrome() const { return num_physical() - num_logical(); }
  double rate() const {
    return static_cast<double>(num_logical()) / static_cast<double>(num_physical());
  }

  /// First input qubit of slice i (1-based).
  std::size_t input_offset(std::size_t slice) const { return seed_.m() + (slice - 1) * seed_.n(); }
  /// First physical qubit of slice i (1-based).
  std::size_t physical_offset(std::size_t slice) const { return (slice - 1) * seed_.n(); }
  bool is_body_slice(std::size_t slice) const { return slice <= duration_; }

  /// Input-stream qubits carrying logical information, in time order.
  std::vector<std::size_t> logical_positions() const;
  /// Input-stream qubits that are syndrome (stabilizer) positions, in time order.
  std::vector<std::size_t> syndrome_positions() const;

  PauliString encode(const PauliString& input) const;
  InverseEncoding inverse_encode(const PauliString& physical) const;

  /// Syndrome bits of a physical error: the X components of all syndrome positions of
  /// its inverse image, in time order.
  BitVector syndrome(const PauliString& physical) const;

  /// Logical stream (L_1 : ... : L_N) of an input stream.
  PauliString logical_part(const PauliString& input) const;
  /// Stabilizer part of an input stream, in syndrome-position order.
  PauliString syndrome_part(const PauliString& input) const;
  /// Reassembles an input stream from its logical and syndrome-position parts.
  PauliString assemble_input(const PauliString& logical, const PauliString& stabilizers) const;

 private:
  SeedTransformation seed_;
  std::size_t duration_;
  std::size_t termination_;
};

}  // namespace qturbo
