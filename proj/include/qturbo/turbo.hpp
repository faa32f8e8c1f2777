#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "qturbo/channel.hpp"
#include "qturbo/encoder.hpp"
#include "qturbo/rng.hpp"
#include "qturbo/siso.hpp"

namespace qturbo {

/// The six invertible 2x2 binary matrices, by index. Entry c lists the images of X
/// and Z; index 0 is the identity.
///   0: X->X Z->Z   1: X->Z Z->X   2: X->X Z->Y   3: X->Y Z->Z   4: X->Y Z->X   5: X->Z Z->Y
Pauli apply_k(std::uint8_t k, Pauli p);
std::uint8_t inverse_k(std::uint8_t k);

/// Qubit permutation followed by single-qubit relabelings:
/// (P_1, ..., P_N) -> (P_pi(1) K_1, ..., P_pi(N) K_N).
class QuantumInterleaver {
 public:
  QuantumInterleaver(std::vector<std::uint32_t> pi, std::vector<std::uint8_t> k);

  static QuantumInterleaver identity(std::size_t size);
  /// Fisher-Yates permutation; K_i uniform over the six matrices unless randomize_k is off.
  static QuantumInterleaver random(std::size_t size, Rng& rng, bool randomize_k = true);

  std::size_t size() const { return pi_.size(); }
  const std::vector<std::uint32_t>& pi() const { return pi_; }
  const std::vector<std::uint8_t>& k() const { return k_; }

  PauliString apply(const PauliString& p) const;
  PauliString apply_inverse(const PauliString& q) const;

  /// Distribution of slot i of the output given distributions of the input qubits.
  std::vector<PauliDistribution> transport(const std::vector<PauliDistribution>& in) const;
  std::vector<PauliDistribution> transport_inverse(const std::vector<PauliDistribution>& out) const;

  QuantumInterleaver inverse() const;
  bool operator==(const QuantumInterleaver&) const = default;

 private:
  std::vector<std::uint32_t> pi_;
  std::vector<std::uint8_t> k_;
};

struct TurboInverse {
  PauliString logical;
  PauliString outer_stabilizers;
  PauliString inner_stabilizers;
  BitVector outer_syndrome;
  BitVector inner_syndrome;
  InverseEncoding outer;
  InverseEncoding inner;
};

/// Outer encoder, interleaver and inner encoder with k_in * N_in = outer physical qubits.
class TurboCode {
 public:
  TurboCode(ConvEncoder outer, ConvEncoder inner, QuantumInterleaver interleaver);

  /// Sizes the inner encoder to absorb every outer physical qubit.
  static TurboCode build(const SeedTransformation& outer, const SeedTransformation& inner,
                         std::size_t outer_duration, std::size_t outer_termination,
                         std::size_t inner_termination, QuantumInterleaver interleaver);

  const ConvEncoder& outer() const { return outer_; }
  const ConvEncoder& inner() const { return inner_; }
  const QuantumInterleaver& interleaver() const { return interleaver_; }

  std::size_t num_logical() const { return outer_.num_logical(); }
  std::size_t num_physical() const { return inner_.num_physical(); }
  double rate() const {
    return static_cast<double>(num_logical()) / static_cast<double>(num_physical());
  }

  PauliString encode(const PauliString& logical, const PauliString& outer_stabilizers,
                     const PauliString& inner_stabilizers) const;
  TurboInverse encode_inverse(const PauliString& physical) const;

 private:
  ConvEncoder outer_;
  ConvEncoder inner_;
  QuantumInterleaver interleaver_;
};

enum class MessageMode { Posterior, Extrinsic };

struct TurboDecoderOptions {
  std::size_t max_iterations = 20;
  MessageMode messages = MessageMode::Posterior;
  /// Stop once two consecutive rounds give the same estimate.
  bool early_stop = true;
  bool keep_history = false;
};

struct TurboDecodeResult {
  PauliString estimate;
  std::size_t iterations = 0;
  std::vector<PauliString> history;
  SisoOutput inner;
  SisoOutput outer;
};

TurboDecodeResult turbo_decode(const TurboCode& code,
                               const std::vector<PauliDistribution>& channel_priors,
                               const BitVector& inner_syndrome, const BitVector& outer_syndrome,
                               const TurboDecoderOptions& options = {});

/// Hard decision from inner decoding alone: the inner logical posteriors are pulled
/// back through the interleaver and the outer encoder is inverted on their argmax.
PauliString inner_only_estimate(const TurboCode& code,
                                const std::vector<PauliDistribution>& channel_priors,
                                const BitVector& inner_syndrome);

/// Turbo-code spec file:
/// {"outer_seed_file", "inner_seed_file", "N_out", "t_out"?, "t_in"?,
///  "interleaver": {"seed": s, "randomize_K"?: true} | {"pi": [...], "K": [...]},
///  "decoder"?: {"iterations", "messages": "posterior" | "extrinsic", "early_stop"}}.
/// Seed paths are relative to the spec file. Terminations default to the memory size.
struct TurboSpec {
  TurboSpec(SeedTransformation outer, SeedTransformation inner)
      : outer_seed(std::move(outer)), inner_seed(std::move(inner)) {}

  SeedTransformation outer_seed;
  SeedTransformation inner_seed;
  std::size_t outer_duration = 0;
  std::size_t outer_termination = 0;
  std::size_t inner_termination = 0;
  std::optional<std::uint64_t> interleaver_seed;
  bool randomize_k = true;
  std::optional<QuantumInterleaver> interleaver;
  TurboDecoderOptions decoder;

  /// Code with the given outer duration (the spec's own when omitted).
  TurboCode make_code(std::optional<std::size_t> outer_duration = std::nullopt) const;
};

TurboSpec load_turbo_spec(const std::string& text, const std::filesystem::path& base_dir = ".");
TurboSpec load_turbo_spec_file(const std::filesystem::path& path);

}  // namespace qturbo
