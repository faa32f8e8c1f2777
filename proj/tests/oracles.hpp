#pragma once

#include <cstdint>
#include <vector>

#include "qturbo/channel.hpp"
#include "qturbo/encoder.hpp"
#include "qturbo/siso.hpp"

namespace qturbo::testing {

/// Exhaustive table of (syndrome, logical) for every error on a tiny encoder.
class ErrorTable {
 public:
  explicit ErrorTable(const ConvEncoder& enc) : enc_(enc) {
    const std::size_t n = enc.num_physical();
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    syndrome_.reserve(count);
    logical_.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) {
      const auto p = PauliString::from_packed(n, v);
      const auto inv = enc.inverse_encode(p);
      syndrome_.push_back(enc.syndrome(p).read(0, enc.num_syndrome()));
      logical_.push_back(enc.logical_part(inv.input).packed(0, enc.num_logical()));
    }
  }

  std::uint64_t size() const { return syndrome_.size(); }
  std::uint64_t syndrome(std::uint64_t error) const { return syndrome_[error]; }
  std::uint64_t logical(std::uint64_t error) const { return logical_[error]; }

  /// Posteriors by direct marginalization over all errors with the given syndrome.
  SisoOutput marginals(const SisoInput& in, std::uint64_t syndrome) const {
    static constexpr std::size_t kIdx[4] = {0, 1, 3, 2};
    const std::size_t n = enc_.num_physical();
    const std::size_t kl = enc_.num_logical();
    SisoOutput out;
    out.physical.assign(n, PauliDistribution{});
    out.logical.assign(kl, PauliDistribution{});
    for (std::uint64_t v = 0; v < size(); ++v) {
      if (syndrome_[v] != syndrome) {
        continue;
      }
      double w = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        w *= in.physical_priors[j][kIdx[(v >> (2 * j)) & 3U]];
      }
      const std::uint64_t l = logical_[v];
      for (std::size_t j = 0; j < kl && !in.logical_priors.empty(); ++j) {
        w *= in.logical_priors[j][kIdx[(l >> (2 * j)) & 3U]];
      }
      for (std::size_t j = 0; j < n; ++j) {
        out.physical[j][kIdx[(v >> (2 * j)) & 3U]] += w;
      }
      for (std::size_t j = 0; j < kl; ++j) {
        out.logical[j][kIdx[(l >> (2 * j)) & 3U]] += w;
      }
    }
    for (auto* group : {&out.physical, &out.logical}) {
      for (auto& f : *group) {
        const double s = f[0] + f[1] + f[2] + f[3];
        for (double& x : f) {
          x /= s;
        }
      }
    }
    return out;
  }

 private:
  const ConvEncoder& enc_;
  std::vector<std::uint64_t> syndrome_;
  std::vector<std::uint64_t> logical_;
};

inline double max_deviation(const std::vector<PauliDistribution>& a,
                            const std::vector<PauliDistribution>& b) {
  double worst = a.size() == b.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    for (std::size_t c = 0; c < 4; ++c) {
      worst = std::max(worst, std::abs(a[i][c] - b[i][c]));
    }
  }
  return worst;
}

inline PauliDistribution random_distribution(Rng& rng) {
  PauliDistribution f;
  double s = 0.0;
  for (double& x : f) {
    x = 0.05 + rng.uniform();
    s += x;
  }
  for (double& x : f) {
    x /= s;
  }
  return f;
}

}  // namespace qturbo::testing
