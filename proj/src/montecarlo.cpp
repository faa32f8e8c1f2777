#include "qturbo/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

struct Tally {
  std::size_t word_errors = 0;
  std::size_t qubit_errors = 0;
  std::size_t decode_failures = 0;
  std::vector<std::size_t> iterations;

  void add_iterations(std::size_t it) {
    if (iterations.size() <= it) {
      iterations.resize(it + 1, 0);
    }
    ++iterations[it];
  }

  void merge(const Tally& other) {
    word_errors += other.word_errors;
    qubit_errors += other.qubit_errors;
    decode_failures += other.decode_failures;
    if (iterations.size() < other.iterations.size()) {
      iterations.resize(other.iterations.size(), 0);
    }
    for (std::size_t i = 0; i < other.iterations.size(); ++i) {
      iterations[i] += other.iterations[i];
    }
  }
};

struct Outcome {
  std::size_t qubit_errors = 0;
  std::size_t iterations = 0;
  bool failed = false;
};

// Runs trials [0, count) across workers; `trial` must depend only on its index.
Tally run_trials(std::size_t count, unsigned threads,
                 const std::function<Outcome(std::size_t)>& trial) {
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<Tally> partial(threads);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t t = next++; t < count; t = next++) {
        const Outcome o = trial(t);
        Tally& tally = partial[w];
        tally.qubit_errors += o.qubit_errors;
        tally.word_errors += (o.failed || o.qubit_errors > 0) ? 1 : 0;
        tally.decode_failures += o.failed ? 1 : 0;
        tally.add_iterations(o.iterations);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) {
        error = std::current_exception();
      }
      next = count;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(worker, w);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  Tally total;
  for (const auto& t : partial) {
    total.merge(t);
  }
  return total;
}

TrialReport make_report(const Tally& tally, const PauliChannel& channel, std::size_t k,
                        const SimulationOptions& options) {
  TrialReport r;
  r.p = 1.0 - channel.distribution(0)[0];
  r.K = k;
  r.trials = options.trials;
  r.word_errors = tally.word_errors;
  r.qubit_errors = tally.qubit_errors;
  r.decode_failures = tally.decode_failures;
  r.wer = static_cast<double>(r.word_errors) / static_cast<double>(r.trials);
  r.qer = static_cast<double>(r.qubit_errors) /
          (static_cast<double>(r.trials) * static_cast<double>(std::max<std::size_t>(k, 1)));
  const auto ci = wilson_interval(r.word_errors, r.trials, kZ95);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  r.master_seed = options.master_seed;
  r.iterations_histogram = tally.iterations;
  return r;
}

std::size_t count_differences(const PauliString& a, const PauliString& b) {
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.num_qubits(); ++j) {
    d += a[j] != b[j];
  }
  return d;
}

PauliString hard_decision(const std::vector<PauliDistribution>& post) {
  PauliString out(post.size());
  for (std::size_t j = 0; j < post.size(); ++j) {
    out.set(j, argmax(post[j]));
  }
  return out;
}

}  // namespace

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) {
    return {0.0, 1.0};
  }
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double TrialReport::iterations_mean() const {
  double sum = 0.0;
  double count = 0.0;
  for (std::size_t i = 0; i < iterations_histogram.size(); ++i) {
    sum += static_cast<double>(i * iterations_histogram[i]);
    count += static_cast<double>(iterations_histogram[i]);
  }
  return count > 0.0 ? sum / count : 0.0;
}

TrialReport run_wer(const TurboCode& code, const PauliChannel& channel,
                    const SimulationOptions& options) {
  if (options.trials == 0) {
    throw ValidationError("need at least one trial");
  }
  const auto priors = channel.priors(code.num_physical());
  const auto tally = run_trials(options.trials, options.threads, [&](std::size_t t) {
    Rng rng = Rng::derive(options.master_seed, t);
    const auto error = channel.sample(code.num_physical(), rng);
    const auto truth = code.encode_inverse(error);
    Outcome o;
    try {
      const auto result =
          turbo_decode(code, priors, truth.inner_syndrome, truth.outer_syndrome, options.decoder);
      o.qubit_errors = count_differences(result.estimate, truth.logical);
      o.iterations = result.iterations;
    } catch (const DecodeFailure&) {
      o.failed = true;
      o.qubit_errors = code.num_logical();
    }
    return o;
  });
  return make_report(tally, channel, code.num_logical(), options);
}

TrialReport run_wer(const ConvEncoder& code, const PauliChannel& channel,
                    const SimulationOptions& options) {
  if (options.trials == 0) {
    throw ValidationError("need at least one trial");
  }
  const auto priors = channel.priors(code.num_physical());
  const auto tally = run_trials(options.trials, options.threads, [&](std::size_t t) {
    Rng rng = Rng::derive(options.master_seed, t);
    const auto error = channel.sample(code.num_physical(), rng);
    const auto inv = code.inverse_encode(error);
    Outcome o;
    o.iterations = 1;
    try {
      const auto post = siso_decode(SisoInput{&code, priors, {}, code.syndrome(error)});
      o.qubit_errors = count_differences(hard_decision(post.logical), code.logical_part(inv.input));
    } catch (const DecodeFailure&) {
      o.failed = true;
      o.qubit_errors = code.num_logical();
    }
    return o;
  });
  return make_report(tally, channel, code.num_logical(), options);
}

double exact_wer(const ConvEncoder& code, const PauliChannel& channel) {
  const std::size_t n = code.num_physical();
  if (n > 12) {
    throw BudgetError("exact WER enumeration is limited to 12 physical qubits");
  }
  const auto priors = channel.priors(n);
  // Decode each syndrome once; the estimate depends on nothing else.
  std::vector<std::optional<PauliString>> estimate(std::size_t{1} << code.num_syndrome());
  std::vector<bool> decoded(estimate.size(), false);
  double failure = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (2 * n)); ++v) {
    const auto error = PauliString::from_packed(n, v);
    const double prob = channel.probability(error);
    if (prob == 0.0) {
      continue;
    }
    const auto syn = code.syndrome(error);
    const auto key = syn.read(0, syn.size());
    if (!decoded[key]) {
      decoded[key] = true;
      try {
        estimate[key] = hard_decision(siso_decode(SisoInput{&code, priors, {}, syn}).logical);
      } catch (const DecodeFailure&) {
        estimate[key].reset();
      }
    }
    const auto truth = code.logical_part(code.inverse_encode(error).input);
    if (!estimate[key].has_value() || *estimate[key] != truth) {
      failure += prob;
    }
  }
  return failure;
}

SearchResult search_codes(const SearchOptions& options) {
  SearchResult result;
  if (options.count == 0) {
    return result;
  }
  if (options.k > options.n) {
    throw ValidationError("k must not exceed n");
  }
  Rng rng(options.seed);
  while (result.seeds.size() < options.count) {
    if (result.attempts >= options.max_attempts) {
      throw BudgetError("found " + std::to_string(result.seeds.size()) + " of " +
                        std::to_string(options.count) + " non-catastrophic seeds in " +
                        std::to_string(result.attempts) + " attempts");
    }
    ++result.attempts;
    SeedTransformation seed(options.n, options.k, options.m,
                            random_symplectic(options.n + options.m, rng));
    const StateDiagram d(seed, options.budget);
    if (!is_non_catastrophic(d)) {
      ++result.rejected;
      continue;
    }
    SearchCandidate c{seed, result.attempts, is_completely_non_catastrophic(d), is_recursive(d),
                      std::nullopt};
    if (options.sieve_wmax) {
      c.spectrum = compute_spectrum(d, *options.sieve_wmax);
    }
    result.seeds.push_back(std::move(c));
  }
  if (options.sieve_wmax) {
    const std::size_t beyond = *options.sieve_wmax + 1;
    auto key = [&](const SearchCandidate& c) {
      const auto& s = *c.spectrum;
      const std::size_t df = s.d_free().value_or(beyond);
      const std::size_t d1 = s.d1().value_or(beyond);
      const std::uint64_t fd = df < beyond ? s.F[df] : 0;
      const std::uint64_t f1 = d1 < beyond ? s.F1[d1] : 0;
      if (options.role == SeedRole::Inner) {
        return std::make_tuple(beyond - d1, f1, beyond - df, fd, c.attempt);
      }
      return std::make_tuple(beyond - df, fd, std::size_t{0}, std::uint64_t{0}, c.attempt);
    };
    std::stable_sort(result.seeds.begin(), result.seeds.end(),
                     [&](const SearchCandidate& a, const SearchCandidate& b) {
                       return key(a) < key(b);
                     });
  }
  if (options.keep && result.seeds.size() > *options.keep) {
    result.seeds.erase(result.seeds.begin() + static_cast<std::ptrdiff_t>(*options.keep),
                       result.seeds.end());
  }
  return result;
}

}  // namespace qturbo
