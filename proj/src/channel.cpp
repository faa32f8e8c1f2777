#include "qturbo/channel.hpp"

#include <cmath>

#include <json.hpp>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

void validate(const PauliDistribution& f) {
  double sum = 0.0;
  for (double v : f) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError("channel probabilities must be finite and non-negative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError("channel probabilities must sum to 1");
  }
}

}  // namespace

PauliChannel::PauliChannel(PauliDistribution shared) : per_qubit_{shared} { validate(shared); }

PauliChannel::PauliChannel(std::vector<PauliDistribution> per_qubit)
    : per_qubit_(std::move(per_qubit)), explicit_(true) {
  if (per_qubit_.empty()) {
    throw ValidationError("per-qubit channel table is empty");
  }
  for (const auto& f : per_qubit_) {
    validate(f);
  }
}

PauliChannel PauliChannel::depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("depolarizing probability must lie in [0, 1]");
  }
  return PauliChannel(PauliDistribution{1.0 - p, p / 3.0, p / 3.0, p / 3.0});
}

PauliChannel PauliChannel::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto type = j.at("type").get<std::string>();
    if (type == "depolarizing") {
      return depolarizing(j.at("p").get<double>());
    }
    if (type == "product") {
      const auto& table = j.at("table");
      if (table.size() == 4 && table[0].is_number()) {
        return PauliChannel(table.get<PauliDistribution>());
      }
      return PauliChannel(table.get<std::vector<PauliDistribution>>());
    }
    throw ValidationError("unknown channel type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed channel spec: ") + e.what());
  }
}

const PauliDistribution& PauliChannel::distribution(std::size_t qubit) const {
  if (!explicit_) {
    return per_qubit_.front();
  }
  if (qubit >= per_qubit_.size()) {
    throw DimensionError("qubit index beyond the channel's per-qubit table");
  }
  return per_qubit_[qubit];
}

PauliString PauliChannel::sample(std::size_t num_qubits, Rng& rng) const {
  if (explicit_ && num_qubits != per_qubit_.size()) {
    throw DimensionError("per-qubit channel table does not match block length");
  }
  PauliString out(num_qubits);
  for (std::size_t j = 0; j < num_qubits; ++j) {
    const auto& f = distribution(j);
    const double u = rng.uniform();
    if (u < f[0]) {
      continue;
    }
    double acc = f[0];
    std::size_t idx = 3;
    for (std::size_t c = 1; c < 3; ++c) {
      acc += f[c];
      if (u < acc) {
        idx = c;
        break;
      }
    }
    // Guard against rounding in the cumulative sum: never pick a zero-probability Pauli.
    while (idx > 0 && f[idx] == 0.0) {
      --idx;
    }
    out.set(j, static_cast<Pauli>(idx));
  }
  return out;
}

std::vector<PauliDistribution> PauliChannel::priors(std::size_t num_qubits) const {
  if (explicit_ && num_qubits != per_qubit_.size()) {
    throw DimensionError("per-qubit channel table does not match block length");
  }
  std::vector<PauliDistribution> out(num_qubits);
  for (std::size_t j = 0; j < num_qubits; ++j) {
    out[j] = distribution(j);
  }
  return out;
}

double PauliChannel::probability(const PauliString& error) const {
  double p = 1.0;
  for (std::size_t j = 0; j < error.num_qubits(); ++j) {
    p *= distribution(j)[static_cast<std::size_t>(error[j])];
  }
  return p;
}

double hashing_rate(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("hashing_rate needs 0 < p < 1");
  }
  const double h2 = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  return 1.0 - h2 - p * std::log2(3.0);
}

double hashing_threshold(double rate) {
  // hashing_rate decreases on (0, 0.1893), where it crosses zero.
  double lo = 1e-12;
  double hi = 0.18929;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hashing_rate(mid) > rate) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qturbo
