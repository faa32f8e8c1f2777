#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qturbo/channel.hpp"
#include "qturbo/encoder.hpp"
#include "qturbo/spectrum.hpp"
#include "qturbo/state_graph.hpp"
#include "qturbo/turbo.hpp"

namespace qturbo {

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ90 = 1.6448536269514722;

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = kZ95);

struct TrialReport {
  double p = 0.0;  // 1 - f(I) of the channel's first qubit
  std::size_t K = 0;
  std::size_t trials = 0;
  std::size_t word_errors = 0;
  std::size_t qubit_errors = 0;
  std::size_t decode_failures = 0;  // also counted as word errors
  double wer = 0.0;
  double qer = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t master_seed = 0;
  /// Entry i counts trials that stopped after i iterations (single-code runs use 1).
  std::vector<std::size_t> iterations_histogram;

  double iterations_mean() const;
  Interval interval(double z) const { return wilson_interval(word_errors, trials, z); }
};

struct SimulationOptions {
  std::size_t trials = 1000;
  std::uint64_t master_seed = 1;
  TurboDecoderOptions decoder;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

/// Word and qubit error rates of the turbo decoder. Trial t draws its error from
/// Rng::derive(master_seed, t); a trial is accepted iff the estimate equals the true
/// logical coset label.
TrialReport run_wer(const TurboCode& code, const PauliChannel& channel,
                    const SimulationOptions& options);

/// The same for one convolutional code decoded by a single SISO pass and argmax.
TrialReport run_wer(const ConvEncoder& code, const PauliChannel& channel,
                    const SimulationOptions& options);

/// Exact failure probability of the single-code decoder by enumerating every error.
/// Only for codes with at most 12 physical qubits.
double exact_wer(const ConvEncoder& code, const PauliChannel& channel);

enum class SeedRole { Outer, Inner };

struct SearchOptions {
  std::size_t n = 3;
  std::size_t k = 1;
  std::size_t m = 3;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 100000;
  /// When set, candidates get a spectrum up to this weight and are ranked.
  std::optional<std::size_t> sieve_wmax;
  /// Keep only this many of the ranked candidates.
  std::optional<std::size_t> keep;
  SeedRole role = SeedRole::Outer;
  EnumerationBudget budget;
};

struct SearchCandidate {
  SeedTransformation seed;
  std::size_t attempt = 0;
  bool completely_non_catastrophic = false;
  bool recursive = false;
  std::optional<DistanceSpectrum> spectrum;
};

struct SearchResult {
  std::vector<SearchCandidate> seeds;
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

/// Draws random seeds until `count` non-catastrophic ones are found. With a sieve,
/// outer-role seeds are ranked by larger d_free then smaller F(d_free); inner-role
/// seeds by larger d1, smaller F1(d1), then the outer key.
SearchResult search_codes(const SearchOptions& options);

}  // namespace qturbo
