#pragma once

#include <cstddef>
#include <vector>

#include "qturbo/bits.hpp"
#include "qturbo/channel.hpp"
#include "qturbo/encoder.hpp"

namespace qturbo {

/// Distribution over G_m indexed by the packed (x, z) memory state; sums to 1.
using MemoryDistribution = std::vector<double>;

struct SisoInput {
  const ConvEncoder* encoder = nullptr;
  /// One 4-vector per physical qubit.
  std::vector<PauliDistribution> physical_priors;
  /// One 4-vector per logical qubit; empty means uniform.
  std::vector<PauliDistribution> logical_priors;
  /// X parts of the syndrome positions, in ConvEncoder::syndrome_positions() order.
  BitVector syndrome;
};

struct SisoOutput {
  std::vector<PauliDistribution> logical;
  std::vector<PauliDistribution> physical;
};

/// Backward messages P(M_i | S^x_{>i}) for i = 0 .. N+t. Entry N+t is the prior of
/// the last m physical qubits.
std::vector<MemoryDistribution> backward_pass(const SisoInput& in);

/// Forward messages P(M_i | S^x_{<=i}) for i = 0 .. N+t-1.
std::vector<MemoryDistribution> forward_pass(const SisoInput& in);

SisoOutput local_update(const SisoInput& in, const std::vector<MemoryDistribution>& forward,
                        const std::vector<MemoryDistribution>& backward);

/// Exact qubit-wise posteriors of a single convolutional code given its syndrome.
/// Throws DecodeFailure when the syndrome has zero probability under the priors.
SisoOutput siso_decode(const SisoInput& in);

/// Index of the largest entry, lowest index on ties.
Pauli argmax(const PauliDistribution& f);

}  // namespace qturbo
