#include "qturbo/turbo.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

constexpr std::array<std::array<Pauli, 2>, 6> kImages = {{
    {Pauli::X, Pauli::Z},
    {Pauli::Z, Pauli::X},
    {Pauli::X, Pauli::Y},
    {Pauli::Y, Pauli::Z},
    {Pauli::Y, Pauli::X},
    {Pauli::Z, Pauli::Y},
}};

// Index permutation of an (I, X, Y, Z) distribution under gamma -> gamma K.
std::array<std::size_t, 4> k_permutation(std::uint8_t k) {
  std::array<std::size_t, 4> perm{};
  for (std::size_t c = 0; c < 4; ++c) {
    perm[c] = static_cast<std::size_t>(apply_k(k, static_cast<Pauli>(c)));
  }
  return perm;
}

// Posterior divided by prior, renormalized; falls back to the posterior when the
// quotient vanishes.
PauliDistribution extrinsic(const PauliDistribution& post, const PauliDistribution& prior) {
  PauliDistribution e{};
  double sum = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    e[c] = prior[c] > 0.0 ? post[c] / prior[c] : 0.0;
    sum += e[c];
  }
  if (!(sum > 0.0)) {
    return post;
  }
  for (double& x : e) {
    x /= sum;
  }
  return e;
}

}  // namespace

Pauli apply_k(std::uint8_t k, Pauli p) {
  if (k >= kImages.size()) {
    throw ValidationError("interleaver matrix index must be in [0, 6)");
  }
  const std::uint8_t xz = to_xz(p);
  std::uint8_t out = 0;
  if (xz & 1U) {
    out ^= to_xz(kImages[k][0]);
  }
  if (xz & 2U) {
    out ^= to_xz(kImages[k][1]);
  }
  return from_xz(out);
}

std::uint8_t inverse_k(std::uint8_t k) {
  for (std::uint8_t j = 0; j < kImages.size(); ++j) {
    if (apply_k(j, apply_k(k, Pauli::X)) == Pauli::X &&
        apply_k(j, apply_k(k, Pauli::Z)) == Pauli::Z) {
      return j;
    }
  }
  throw ValidationError("interleaver matrix index must be in [0, 6)");
}

QuantumInterleaver::QuantumInterleaver(std::vector<std::uint32_t> pi, std::vector<std::uint8_t> k)
    : pi_(std::move(pi)), k_(std::move(k)) {
  if (pi_.size() != k_.size()) {
    throw DimensionError("interleaver permutation and matrix list differ in length");
  }
  std::vector<bool> hit(pi_.size(), false);
  for (auto v : pi_) {
    if (v >= pi_.size() || hit[v]) {
      throw ValidationError("interleaver permutation is not a bijection");
    }
    hit[v] = true;
  }
  for (auto v : k_) {
    if (v >= kImages.size()) {
      throw ValidationError("interleaver matrix index must be in [0, 6)");
    }
  }
}

QuantumInterleaver QuantumInterleaver::identity(std::size_t size) {
  std::vector<std::uint32_t> pi(size);
  std::iota(pi.begin(), pi.end(), 0U);
  return QuantumInterleaver(std::move(pi), std::vector<std::uint8_t>(size, 0));
}

QuantumInterleaver QuantumInterleaver::random(std::size_t size, Rng& rng, bool randomize_k) {
  if (size == 0) {
    throw ValidationError("interleaver size must be positive");
  }
  std::vector<std::uint32_t> pi(size);
  std::iota(pi.begin(), pi.end(), 0U);
  for (std::size_t i = size - 1; i > 0; --i) {
    std::swap(pi[i], pi[rng.below(i + 1)]);
  }
  std::vector<std::uint8_t> k(size, 0);
  if (randomize_k) {
    for (auto& v : k) {
      v = static_cast<std::uint8_t>(rng.below(kImages.size()));
    }
  }
  return QuantumInterleaver(std::move(pi), std::move(k));
}

PauliString QuantumInterleaver::apply(const PauliString& p) const {
  if (p.num_qubits() != size()) {
    throw DimensionError("interleaver input has the wrong length");
  }
  PauliString q(size());
  for (std::size_t i = 0; i < size(); ++i) {
    q.set(i, apply_k(k_[i], p[pi_[i]]));
  }
  return q;
}

PauliString QuantumInterleaver::apply_inverse(const PauliString& q) const {
  if (q.num_qubits() != size()) {
    throw DimensionError("interleaver input has the wrong length");
  }
  PauliString p(size());
  for (std::size_t i = 0; i < size(); ++i) {
    p.set(pi_[i], apply_k(inverse_k(k_[i]), q[i]));
  }
  return p;
}

std::vector<PauliDistribution> QuantumInterleaver::transport(
    const std::vector<PauliDistribution>& in) const {
  if (in.size() != size()) {
    throw DimensionError("interleaver input has the wrong length");
  }
  std::vector<PauliDistribution> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto perm = k_permutation(k_[i]);
    for (std::size_t c = 0; c < 4; ++c) {
      out[i][perm[c]] = in[pi_[i]][c];
    }
  }
  return out;
}

std::vector<PauliDistribution> QuantumInterleaver::transport_inverse(
    const std::vector<PauliDistribution>& out) const {
  if (out.size() != size()) {
    throw DimensionError("interleaver input has the wrong length");
  }
  std::vector<PauliDistribution> in(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto perm = k_permutation(k_[i]);
    for (std::size_t c = 0; c < 4; ++c) {
      in[pi_[i]][c] = out[i][perm[c]];
    }
  }
  return in;
}

QuantumInterleaver QuantumInterleaver::inverse() const {
  std::vector<std::uint32_t> pi(size());
  std::vector<std::uint8_t> k(size());
  for (std::size_t i = 0; i < size(); ++i) {
    pi[pi_[i]] = static_cast<std::uint32_t>(i);
    k[pi_[i]] = inverse_k(k_[i]);
  }
  return QuantumInterleaver(std::move(pi), std::move(k));
}

TurboCode::TurboCode(ConvEncoder outer, ConvEncoder inner, QuantumInterleaver interleaver)
    : outer_(std::move(outer)), inner_(std::move(inner)), interleaver_(std::move(interleaver)) {
  if (inner_.num_logical() != outer_.num_physical()) {
    throw DimensionError("inner logical qubits (" + std::to_string(inner_.num_logical()) +
                         ") must equal outer physical qubits (" +
                         std::to_string(outer_.num_physical()) + ")");
  }
  if (interleaver_.size() != outer_.num_physical()) {
    throw DimensionError("interleaver size must equal the outer physical qubit count");
  }
}

TurboCode TurboCode::build(const SeedTransformation& outer, const SeedTransformation& inner,
                           std::size_t outer_duration, std::size_t outer_termination,
                           std::size_t inner_termination, QuantumInterleaver interleaver) {
  ConvEncoder out(outer, outer_duration, outer_termination);
  if (inner.k() == 0 || out.num_physical() % inner.k() != 0) {
    throw ValidationError("inner k must divide the outer physical qubit count " +
                          std::to_string(out.num_physical()));
  }
  ConvEncoder in(inner, out.num_physical() / inner.k(), inner_termination);
  return TurboCode(std::move(out), std::move(in), std::move(interleaver));
}

PauliString TurboCode::encode(const PauliString& logical, const PauliString& outer_stabilizers,
                              const PauliString& inner_stabilizers) const {
  const auto outer_phys = outer_.encode(outer_.assemble_input(logical, outer_stabilizers));
  return inner_.encode(inner_.assemble_input(interleaver_.apply(outer_phys), inner_stabilizers));
}

TurboInverse TurboCode::encode_inverse(const PauliString& physical) const {
  TurboInverse r;
  r.inner = inner_.inverse_encode(physical);
  r.inner_stabilizers = inner_.syndrome_part(r.inner.input);
  const auto outer_phys = interleaver_.apply_inverse(inner_.logical_part(r.inner.input));
  r.outer = outer_.inverse_encode(outer_phys);
  r.logical = outer_.logical_part(r.outer.input);
  r.outer_stabilizers = outer_.syndrome_part(r.outer.input);
  // One bit per stabilizer qubit: its X component.
  auto compress = [](const PauliString& s) {
    BitVector b(s.num_qubits());
    for (std::size_t j = 0; j < s.num_qubits(); ++j) {
      b.set(j, s.bits().get(2 * j));
    }
    return b;
  };
  r.outer_syndrome = compress(r.outer_stabilizers);
  r.inner_syndrome = compress(r.inner_stabilizers);
  return r;
}

TurboDecodeResult turbo_decode(const TurboCode& code,
                               const std::vector<PauliDistribution>& channel_priors,
                               const BitVector& inner_syndrome, const BitVector& outer_syndrome,
                               const TurboDecoderOptions& options) {
  if (options.max_iterations == 0) {
    throw ValidationError("turbo decoding needs at least one iteration");
  }
  const auto& pi = code.interleaver();
  SisoInput inner_in{&code.inner(), channel_priors, {}, inner_syndrome};
  SisoInput outer_in{&code.outer(), {}, {}, outer_syndrome};
  TurboDecodeResult result;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    try {
      result.inner = siso_decode(inner_in);
    } catch (const DecodeFailure& e) {
      throw DecodeFailure(std::string("inner decoder at iteration ") + std::to_string(it) +
                              ": " + e.what(),
                          e.time_index());
    }

    std::vector<PauliDistribution> to_outer = result.inner.logical;
    if (options.messages == MessageMode::Extrinsic && !inner_in.logical_priors.empty()) {
      for (std::size_t i = 0; i < to_outer.size(); ++i) {
        to_outer[i] = extrinsic(to_outer[i], inner_in.logical_priors[i]);
      }
    }
    outer_in.physical_priors = pi.transport_inverse(to_outer);
    try {
      result.outer = siso_decode(outer_in);
    } catch (const DecodeFailure& e) {
      throw DecodeFailure(std::string("outer decoder at iteration ") + std::to_string(it) +
                              ": " + e.what(),
                          e.time_index());
    }

    PauliString estimate(code.num_logical());
    for (std::size_t j = 0; j < estimate.num_qubits(); ++j) {
      estimate.set(j, argmax(result.outer.logical[j]));
    }
    const bool stable = it > 1 && estimate == result.estimate;
    result.estimate = std::move(estimate);
    result.iterations = it;
    if (options.keep_history) {
      result.history.push_back(result.estimate);
    }
    if (options.early_stop && stable) {
      break;
    }

    std::vector<PauliDistribution> to_inner = result.outer.physical;
    if (options.messages == MessageMode::Extrinsic) {
      for (std::size_t i = 0; i < to_inner.size(); ++i) {
        to_inner[i] = extrinsic(to_inner[i], outer_in.physical_priors[i]);
      }
    }
    inner_in.logical_priors = pi.transport(to_inner);
  }
  return result;
}

PauliString inner_only_estimate(const TurboCode& code,
                                const std::vector<PauliDistribution>& channel_priors,
                                const BitVector& inner_syndrome) {
  const auto inner = siso_decode(SisoInput{&code.inner(), channel_priors, {}, inner_syndrome});
  PauliString q(inner.logical.size());
  for (std::size_t j = 0; j < q.num_qubits(); ++j) {
    q.set(j, argmax(inner.logical[j]));
  }
  const auto outer_phys = code.interleaver().apply_inverse(q);
  return code.outer().logical_part(code.outer().inverse_encode(outer_phys).input);
}

TurboCode TurboSpec::make_code(std::optional<std::size_t> duration) const {
  const std::size_t n_out = duration.value_or(outer_duration);
  const ConvEncoder probe(outer_seed, n_out, outer_termination);
  const std::size_t size = probe.num_physical();
  QuantumInterleaver pi = QuantumInterleaver::identity(size);
  if (interleaver.has_value()) {
    if (interleaver->size() != size) {
      throw ValidationError("explicit interleaver has size " + std::to_string(interleaver->size()) +
                            " but the outer code emits " + std::to_string(size) + " qubits");
    }
    pi = *interleaver;
  } else {
    Rng rng(interleaver_seed.value_or(0));
    pi = QuantumInterleaver::random(size, rng, randomize_k);
  }
  return TurboCode::build(outer_seed, inner_seed, n_out, outer_termination, inner_termination,
                          std::move(pi));
}

TurboSpec load_turbo_spec(const std::string& text, const std::filesystem::path& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("turbo spec is not valid JSON: ") + e.what());
  }
  try {
    auto resolve = [&](const std::string& p) {
      const std::filesystem::path path(p);
      return path.is_absolute() ? path : base_dir / path;
    };
    TurboSpec spec(load_seed_file(resolve(j.at("outer_seed_file").get<std::string>())),
                   load_seed_file(resolve(j.at("inner_seed_file").get<std::string>())));
    spec.outer_duration = j.at("N_out").get<std::size_t>();
    spec.outer_termination = j.value("t_out", spec.outer_seed.m());
    spec.inner_termination = j.value("t_in", spec.inner_seed.m());
    if (j.contains("interleaver")) {
      const auto& il = j.at("interleaver");
      if (il.contains("pi")) {
        spec.interleaver = QuantumInterleaver(il.at("pi").get<std::vector<std::uint32_t>>(),
                                              il.at("K").get<std::vector<std::uint8_t>>());
      } else {
        spec.interleaver_seed = il.value("seed", std::uint64_t{0});
        spec.randomize_k = il.value("randomize_K", true);
      }
    }
    if (j.contains("decoder")) {
      const auto& d = j.at("decoder");
      spec.decoder.max_iterations = d.value("iterations", spec.decoder.max_iterations);
      spec.decoder.early_stop = d.value("early_stop", spec.decoder.early_stop);
      const auto mode = d.value("messages", std::string("posterior"));
      if (mode == "posterior") {
        spec.decoder.messages = MessageMode::Posterior;
      } else if (mode == "extrinsic") {
        spec.decoder.messages = MessageMode::Extrinsic;
      } else {
        throw ValidationError("decoder.messages must be 'posterior' or 'extrinsic'");
      }
      if (d.contains("randomize_K")) {
        spec.randomize_k = d.at("randomize_K").get<bool>();
      }
    }
    if (spec.outer_duration == 0) {
      throw ValidationError("N_out must be positive");
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed turbo spec: ") + e.what());
  }
}

TurboSpec load_turbo_spec_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) {
    throw ValidationError("cannot open turbo spec " + path.string());
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return load_turbo_spec(ss.str(), path.parent_path());
}

}  // namespace qturbo
