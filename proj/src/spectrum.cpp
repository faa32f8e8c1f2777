#include "qturbo/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

std::optional<std::size_t> first_nonzero(const std::vector<std::uint64_t>& v) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] != 0) {
      return w;
    }
  }
  return std::nullopt;
}

void add_checked(std::uint64_t& acc, std::uint64_t value) {
  if (__builtin_add_overflow(acc, value, &acc)) {
    throw BudgetError("distance spectrum count overflows 64 bits; lower w_max");
  }
}

std::string describe(const StateDiagram& d, const ZeroWeightCycle& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    out << d.vertex_label(c.vertices[i]) << " -> ";
  }
  out << d.vertex_label(c.vertices.front()) << " (logical weight " << c.logical_weight << ")";
  return out.str();
}

}  // namespace

std::optional<std::size_t> DistanceSpectrum::d_free() const { return first_nonzero(F); }
std::optional<std::size_t> DistanceSpectrum::d1() const { return first_nonzero(F1); }

std::string DistanceSpectrum::to_csv() const {
  std::ostringstream out;
  out << "w,F,F1\n";
  for (std::size_t w = 0; w <= w_max; ++w) {
    out << w << "," << F[w] << "," << F1[w] << "\n";
  }
  return out.str();
}

DistanceSpectrum compute_spectrum(const StateDiagram& d, std::size_t w_max) {
  const auto cs = analyze_cycles(d);
  for (const auto& c : cs.cycles) {
    if (c.logical_weight > 0) {
      throw ValidationError("catastrophic seed: zero-physical-weight cycle " + describe(d, c));
    }
  }
  DistanceSpectrum spec;
  spec.w_max = w_max;
  spec.F.assign(w_max + 1, 0);
  spec.F1.assign(w_max + 1, 0);

  const std::size_t nv = d.num_vertices();
  const std::size_t layers = w_max + 1;
  auto index = [&](std::size_t v, std::size_t w, std::size_t lc) {
    return (v * layers + w) * 3 + lc;
  };
  std::vector<std::uint64_t> current(nv * layers * 3, 0);
  std::vector<std::uint64_t> next(current.size(), 0);
  bool active = false;

  auto arrive = [&](std::uint32_t to, std::size_t w, std::size_t lc, std::uint64_t count,
                    std::vector<std::uint64_t>& frontier) {
    if (cs.cycle_of_vertex[to] >= 0) {
      if (lc > 0) {
        add_checked(spec.F[w], count);
      }
      if (lc == 1) {
        add_checked(spec.F1[w], count);
      }
    } else {
      add_checked(frontier[index(to, w, lc)], count);
      active = true;
    }
  };

  for (std::uint32_t s = 0; s < nv; ++s) {
    if (cs.cycle_of_vertex[s] < 0) {
      continue;
    }
    const auto out = d.out_edges(s);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t idx = static_cast<std::size_t>(s) * d.out_degree() + i;
      const auto& e = out[i];
      if (cs.edge_on_cycle[idx] || static_cast<std::size_t>(e.physical_weight) > w_max) {
        continue;
      }
      arrive(e.to, e.physical_weight, std::min(e.logical_weight, 2), 1, current);
    }
  }

  // Each step extends every open path by one edge, so each path is counted once.
  while (active) {
    active = false;
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t v = 0; v < nv; ++v) {
      for (std::size_t w = 0; w <= w_max; ++w) {
        for (std::size_t lc = 0; lc < 3; ++lc) {
          const std::uint64_t count = current[index(v, w, lc)];
          if (count == 0) {
            continue;
          }
          for (const auto& e : d.out_edges(v)) {
            const std::size_t w2 = w + static_cast<std::size_t>(e.physical_weight);
            if (w2 > w_max) {
              continue;
            }
            const std::size_t lc2 = std::min<std::size_t>(lc + static_cast<std::size_t>(e.logical_weight), 2);
            arrive(e.to, w2, lc2, count, next);
          }
        }
      }
    }
    current.swap(next);
  }
  return spec;
}

DistanceSpectrum compute_spectrum(const SeedTransformation& seed, std::size_t w_max,
                                  EnumerationBudget budget) {
  return compute_spectrum(StateDiagram(seed, budget), w_max);
}

std::size_t turbo_dmin_bound(const DistanceSpectrum& outer, const DistanceSpectrum& inner) {
  const auto df = outer.d_free();
  const auto d1 = inner.d1();
  if (!df || !d1) {
    throw ValidationError("minimum-distance bound is indeterminate: spectrum is zero up to w_max");
  }
  return *df * *d1;
}

}  // namespace qturbo
