#include "qturbo/siso.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

// Position in an (I, X, Y, Z) distribution of a packed xz code.
constexpr std::array<std::size_t, 4> kDistIndex = {0, 1, 3, 2};

// Output widths up to this many qubits get a tabulated branch metric.
constexpr std::size_t kMaxTableQubits = 8;

double product_prior(const PauliDistribution* priors, std::size_t count, std::uint64_t packed) {
  double p = 1.0;
  for (std::size_t j = 0; j < count; ++j) {
    p *= priors[j][kDistIndex[(packed >> (2 * j)) & 3U]];
  }
  return p;
}

// Bit j of `bits` moved to position 2j + shift.
std::uint64_t spread(std::uint64_t bits, std::size_t count, std::size_t shift) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < count; ++j) {
    out |= ((bits >> j) & 1U) << (2 * j + shift);
  }
  return out;
}

void normalize_or_fail(std::vector<double>& v, std::size_t time, const char* what) {
  double sum = 0.0;
  for (double x : v) {
    sum += x;
  }
  if (!(sum > 0.0)) {
    throw DecodeFailure(std::string(what) + ": syndrome has zero probability", time);
  }
  const double inv = 1.0 / sum;
  for (double& x : v) {
    x *= inv;
  }
}

void normalize_or_fail(PauliDistribution& f, std::size_t time) {
  const double sum = f[0] + f[1] + f[2] + f[3];
  if (!(sum > 0.0)) {
    throw DecodeFailure("local update: zero posterior", time);
  }
  for (double& x : f) {
    x /= sum;
  }
}

// Everything about one time slice that does not depend on the memory input.
struct Slice {
  std::size_t index = 0;
  bool last = false;
  std::size_t out_width = 0;                 // physical qubits emitted (n, or n+m on the last slice)
  const PauliDistribution* priors = nullptr;  // physical priors of those qubits
  std::vector<std::uint64_t> rest_out;       // image of (0 : lambda : sigma)
  std::vector<double> rest_weight;           // logical prior of lambda
  std::vector<std::uint32_t> rest_lambda;
  std::vector<double> table;                 // branch metric over the emitted qubits

  double branch(std::uint64_t out) const {
    const std::uint64_t phys = out & packed::mask(out_width);
    return table.empty() ? product_prior(priors, out_width, phys) : table[phys];
  }
};

class Trellis {
 public:
  explicit Trellis(const SisoInput& in) : in_(in) {
    if (in.encoder == nullptr) {
      throw ValidationError("SISO input has no encoder");
    }
    const ConvEncoder& enc = *in.encoder;
    if (in.physical_priors.size() != enc.num_physical()) {
      throw DimensionError("physical prior count does not match the encoder");
    }
    if (!in.logical_priors.empty() && in.logical_priors.size() != enc.num_logical()) {
      throw DimensionError("logical prior count does not match the encoder");
    }
    if (in.syndrome.size() != enc.num_syndrome()) {
      throw DimensionError("syndrome length does not match the encoder");
    }
    const auto& seed = enc.seed();
    mu_out_.resize(std::size_t{1} << (2 * seed.m()));
    for (std::uint64_t mu = 0; mu < mu_out_.size(); ++mu) {
      mu_out_[mu] = seed.apply(mu);
    }
  }

  const ConvEncoder& encoder() const { return *in_.encoder; }
  std::size_t slices() const { return encoder().slices(); }
  std::size_t memory_states() const { return mu_out_.size(); }
  std::uint64_t mu_out(std::uint64_t mu) const { return mu_out_[mu]; }

  std::uint64_t memory_of(std::uint64_t out) const { return out >> (2 * encoder().seed().n()); }

  std::size_t syndrome_offset(std::size_t i) const {
    const auto& s = encoder().seed();
    const std::size_t body = std::min(i - 1, encoder().duration());
    return s.m() + body * (s.n() - s.k()) + (i - 1 - body) * s.n();
  }

  Slice slice(std::size_t i) const {
    const ConvEncoder& enc = encoder();
    const auto& seed = enc.seed();
    const std::size_t n = seed.n();
    const std::size_t k = seed.k();
    const std::size_t m = seed.m();
    Slice s;
    s.index = i;
    s.last = i == enc.slices();
    s.out_width = s.last ? n + m : n;
    s.priors = in_.physical_priors.data() + enc.physical_offset(i);
    if (s.out_width <= kMaxTableQubits) {
      s.table.resize(std::size_t{1} << (2 * s.out_width));
      for (std::uint64_t v = 0; v < s.table.size(); ++v) {
        s.table[v] = product_prior(s.priors, s.out_width, v);
      }
    }

    const bool body = enc.is_body_slice(i);
    const std::size_t kk = body ? k : 0;
    const std::size_t stabs = n - kk;
    const std::uint64_t sx = in_.syndrome.read(syndrome_offset(i), stabs);
    const std::uint64_t sigma_x = spread(sx, stabs, 0);
    const std::size_t num_lambda = std::size_t{1} << (2 * kk);
    const std::size_t num_sigma = std::size_t{1} << stabs;
    const PauliDistribution* lp =
        in_.logical_priors.empty() ? nullptr : in_.logical_priors.data() + (i - 1) * k;
    s.rest_out.reserve(num_lambda * num_sigma);
    for (std::uint64_t lambda = 0; lambda < num_lambda; ++lambda) {
      const double w = (lp == nullptr) ? 1.0 : product_prior(lp, kk, lambda);
      for (std::uint64_t sz = 0; sz < num_sigma; ++sz) {
        const std::uint64_t sigma = sigma_x | spread(sz, stabs, 1);
        const std::uint64_t input = (lambda << (2 * m)) | (sigma << (2 * (m + kk)));
        s.rest_out.push_back(seed.apply(input));
        s.rest_weight.push_back(w);
        s.rest_lambda.push_back(static_cast<std::uint32_t>(lambda));
      }
    }
    return s;
  }

  MemoryDistribution final_memory() const {
    const ConvEncoder& enc = encoder();
    const std::size_t m = enc.seed().m();
    const PauliDistribution* tail =
        in_.physical_priors.data() + enc.physical_offset(enc.slices()) + enc.seed().n();
    MemoryDistribution b(memory_states());
    for (std::uint64_t v = 0; v < b.size(); ++v) {
      b[v] = product_prior(tail, m, v);
    }
    return b;
  }

  MemoryDistribution initial_memory() const {
    const std::size_t m = encoder().seed().m();
    const std::uint64_t x = spread(in_.syndrome.read(0, m), m, 0);
    MemoryDistribution f(memory_states(), 0.0);
    const double mass = 1.0 / static_cast<double>(std::size_t{1} << m);
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << m); ++z) {
      f[x | spread(z, m, 1)] = mass;
    }
    return f;
  }

 private:
  const SisoInput& in_;
  std::vector<std::uint64_t> mu_out_;
};

}  // namespace

std::vector<MemoryDistribution> backward_pass(const SisoInput& in) {
  const Trellis trellis(in);
  const std::size_t T = trellis.slices();
  std::vector<MemoryDistribution> b(T + 1);
  b[T] = trellis.final_memory();
  normalize_or_fail(b[T], T, "backward pass");
  for (std::size_t i = T; i >= 1; --i) {
    const Slice s = trellis.slice(i);
    MemoryDistribution& prev = b[i - 1];
    prev.assign(trellis.memory_states(), 0.0);
    const MemoryDistribution& next = b[i];
    for (std::uint64_t mu = 0; mu < prev.size(); ++mu) {
      const std::uint64_t base = trellis.mu_out(mu);
      double acc = 0.0;
      for (std::size_t r = 0; r < s.rest_out.size(); ++r) {
        const std::uint64_t out = base ^ s.rest_out[r];
        // The last slice's branch already covers the final memory qubits.
        const double tail = s.last ? 1.0 : next[trellis.memory_of(out)];
        acc += s.rest_weight[r] * s.branch(out) * tail;
      }
      prev[mu] = acc;
    }
    normalize_or_fail(prev, i - 1, "backward pass");
  }
  return b;
}

std::vector<MemoryDistribution> forward_pass(const SisoInput& in) {
  const Trellis trellis(in);
  const std::size_t T = trellis.slices();
  std::vector<MemoryDistribution> f(T);
  f[0] = trellis.initial_memory();
  for (std::size_t i = 1; i < T; ++i) {
    const Slice s = trellis.slice(i);
    const MemoryDistribution& prev = f[i - 1];
    MemoryDistribution& cur = f[i];
    cur.assign(trellis.memory_states(), 0.0);
    for (std::uint64_t mu = 0; mu < prev.size(); ++mu) {
      if (prev[mu] == 0.0) {
        continue;
      }
      const std::uint64_t base = trellis.mu_out(mu);
      for (std::size_t r = 0; r < s.rest_out.size(); ++r) {
        const std::uint64_t out = base ^ s.rest_out[r];
        cur[trellis.memory_of(out)] += prev[mu] * s.rest_weight[r] * s.branch(out);
      }
    }
    normalize_or_fail(cur, i, "forward pass");
  }
  return f;
}

SisoOutput local_update(const SisoInput& in, const std::vector<MemoryDistribution>& forward,
                        const std::vector<MemoryDistribution>& backward) {
  const Trellis trellis(in);
  const ConvEncoder& enc = trellis.encoder();
  const std::size_t T = trellis.slices();
  const std::size_t k = enc.seed().k();
  if (forward.size() != T || backward.size() != T + 1) {
    throw DimensionError("message count does not match the encoder");
  }
  SisoOutput out;
  out.logical.assign(enc.num_logical(), PauliDistribution{});
  out.physical.assign(enc.num_physical(), PauliDistribution{});

  std::vector<double> lambda_acc;
  std::vector<double> phys_acc;
  for (std::size_t i = 1; i <= T; ++i) {
    const Slice s = trellis.slice(i);
    const bool body = enc.is_body_slice(i);
    const MemoryDistribution& prev = forward[i - 1];
    const MemoryDistribution& next = backward[i];
    const bool joint = !s.table.empty();
    lambda_acc.assign(body ? (std::size_t{1} << (2 * k)) : 1, 0.0);
    if (joint) {
      phys_acc.assign(s.table.size(), 0.0);
    }
    PauliDistribution* phys_post = out.physical.data() + enc.physical_offset(i);
    for (std::uint64_t mu = 0; mu < prev.size(); ++mu) {
      if (prev[mu] == 0.0) {
        continue;
      }
      const std::uint64_t base = trellis.mu_out(mu);
      for (std::size_t r = 0; r < s.rest_out.size(); ++r) {
        const std::uint64_t o = base ^ s.rest_out[r];
        const double tail = s.last ? 1.0 : next[trellis.memory_of(o)];
        const double w = prev[mu] * s.rest_weight[r] * s.branch(o) * tail;
        if (w == 0.0) {
          continue;
        }
        lambda_acc[s.rest_lambda[r]] += w;
        const std::uint64_t phys = o & packed::mask(s.out_width);
        if (joint) {
          phys_acc[phys] += w;
        } else {
          for (std::size_t j = 0; j < s.out_width; ++j) {
            phys_post[j][kDistIndex[(phys >> (2 * j)) & 3U]] += w;
          }
        }
      }
    }
    if (joint) {
      for (std::uint64_t v = 0; v < phys_acc.size(); ++v) {
        if (phys_acc[v] == 0.0) {
          continue;
        }
        for (std::size_t j = 0; j < s.out_width; ++j) {
          phys_post[j][kDistIndex[(v >> (2 * j)) & 3U]] += phys_acc[v];
        }
      }
    }
    for (std::size_t j = 0; j < s.out_width; ++j) {
      normalize_or_fail(phys_post[j], i);
    }
    if (body) {
      PauliDistribution* lpost = out.logical.data() + (i - 1) * k;
      for (std::uint64_t lambda = 0; lambda < lambda_acc.size(); ++lambda) {
        for (std::size_t j = 0; j < k; ++j) {
          lpost[j][kDistIndex[(lambda >> (2 * j)) & 3U]] += lambda_acc[lambda];
        }
      }
      for (std::size_t j = 0; j < k; ++j) {
        normalize_or_fail(lpost[j], i);
      }
    }
  }
  return out;
}

SisoOutput siso_decode(const SisoInput& in) {
  const auto b = backward_pass(in);
  const auto f = forward_pass(in);
  return local_update(in, f, b);
}

Pauli argmax(const PauliDistribution& f) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < 4; ++c) {
    if (f[c] > f[best]) {
      best = c;
    }
  }
  return static_cast<Pauli>(best);
}

}  // namespace qturbo
