#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qturbo/pauli.hpp"
#include "qturbo/rng.hpp"

namespace qturbo {

/// Probability vector over a single qubit in (I, X, Y, Z) order.
using PauliDistribution = std::array<double, 4>;

/// Memoryless Pauli channel. Either one distribution shared by every qubit, or an
/// explicit per-qubit table (which then fixes the block length).
class PauliChannel {
 public:
  explicit PauliChannel(PauliDistribution shared);
  explicit PauliChannel(std::vector<PauliDistribution> per_qubit);

  /// f(I) = 1 - p, f(X) = f(Y) = f(Z) = p / 3.
  static PauliChannel depolarizing(double p);

  /// Parses {"type": "depolarizing", "p": x} or {"type": "product", "table": [...]},
  /// where the table is one 4-vector or a list of 4-vectors.
  static PauliChannel from_json(const std::string& text);

  const PauliDistribution& distribution(std::size_t qubit) const;
  bool is_shared() const { return per_qubit_.size() == 1 && !explicit_; }

  PauliString sample(std::size_t num_qubits, Rng& rng) const;
  std::vector<PauliDistribution> priors(std::size_t num_qubits) const;

  /// Probability of a specific error under the product distribution.
  double probability(const PauliString& error) const;

 private:
  std::vector<PauliDistribution> per_qubit_;
  bool explicit_ = false;
};

/// Hashing-bound rate 1 - h2(p) - p log2(3) of the depolarizing channel.
double hashing_rate(double p);

/// Depolarizing probability at which hashing_rate equals `rate` (bisection).
double hashing_threshold(double rate);

}  // namespace qturbo
