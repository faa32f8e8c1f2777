#include <doctest.h>

#include <functional>

#include "qturbo/errors.hpp"
#include "qturbo/rng.hpp"
#include "qturbo/spectrum.hpp"
#include "test_support.hpp"

using namespace qturbo;

namespace {

// Depth-first enumeration of admissible paths, independent of the frontier DP.
DistanceSpectrum brute_force(const StateDiagram& d, std::size_t w_max) {
  const auto cs = analyze_cycles(d);
  DistanceSpectrum s{w_max, std::vector<std::uint64_t>(w_max + 1, 0),
                     std::vector<std::uint64_t>(w_max + 1, 0)};
  std::function<void(std::uint32_t, std::size_t, int)> walk = [&](std::uint32_t v, std::size_t w,
                                                                  int lw) {
    if (cs.cycle_of_vertex[v] >= 0) {
      if (lw > 0) {
        ++s.F[w];
      }
      if (lw == 1) {
        ++s.F1[w];
      }
      return;
    }
    for (const auto& e : d.out_edges(v)) {
      if (w + e.physical_weight <= w_max) {
        walk(e.to, w + e.physical_weight, lw + e.logical_weight);
      }
    }
  };
  for (std::uint32_t v = 0; v < d.num_vertices(); ++v) {
    if (cs.cycle_of_vertex[v] < 0) {
      continue;
    }
    for (const auto& e : d.out_edges(v)) {
      const auto idx = static_cast<std::size_t>(&e - d.edges().data());
      if (!cs.edge_on_cycle[idx] && static_cast<std::size_t>(e.physical_weight) <= w_max) {
        walk(e.to, e.physical_weight, e.logical_weight);
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("published spectra") {
  const auto u313 = compute_spectrum(testing::shipped_seed("u313"), 20);
  CHECK(u313.F1 == std::vector<std::uint64_t>{0,   0,   0,    0,    0,    0,    2,
                                               4,   8,   16,   35,   70,   143,  295,
                                               634, 1362, 2802, 5714, 11526, 23674, 48817});
  CHECK(std::vector<std::uint64_t>(u313.F.begin(), u313.F.begin() + 13) ==
        std::vector<std::uint64_t>{0, 0, 0, 0, 1, 11, 47, 265, 1275, 6397, 31785, 160311, 801232});
  CHECK(u313.d_free() == 4);
  CHECK(u313.d1() == 6);

  const auto u214 = compute_spectrum(testing::shipped_seed("u214"), 12);
  CHECK(u214.F[5] == 6);
  CHECK(u214.F[6] == 82);
  CHECK(u214.F[7] == 442);
  CHECK(u214.F[8] == 3379);
  CHECK(u214.F[12] == 9033087);
}

TEST_CASE("distance bounds") {
  const auto u313 = compute_spectrum(testing::shipped_seed("u313"), 10);
  const auto u314 = compute_spectrum(testing::shipped_seed("u314"), 10);
  const auto u214 = compute_spectrum(testing::shipped_seed("u214"), 10);
  CHECK(turbo_dmin_bound(u313, u313) == 24);
  CHECK(turbo_dmin_bound(u314, u314) == 42);
  CHECK(turbo_dmin_bound(u214, u214) == 40);
  DistanceSpectrum ones{1, {0, 1}, {0, 1}};
  CHECK(turbo_dmin_bound(ones, ones) == 1);
  DistanceSpectrum empty{3, {0, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_THROWS_AS(turbo_dmin_bound(empty, u313), ValidationError);
}

TEST_CASE("catastrophic seeds are refused") {
  CHECK_THROWS_AS(compute_spectrum(testing::toy211_seed(), 6), ValidationError);
}

TEST_CASE("frontier DP matches depth-first enumeration on small seeds") {
  Rng rng(123);
  int checked = 0;
  const std::size_t params[][3] = {{2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {3, 2, 2}};
  for (const auto& p : params) {
    for (int t = 0; t < 60; ++t) {
      const SeedTransformation seed(p[0], p[1], p[2], random_symplectic(p[0] + p[2], rng));
      const auto d = build_state_diagram(seed);
      if (!is_non_catastrophic(d)) {
        continue;
      }
      ++checked;
      const auto dp = compute_spectrum(d, 6);
      const auto bf = brute_force(d, 6);
      CHECK(dp.F == bf.F);
      CHECK(dp.F1 == bf.F1);
      for (std::size_t w = 0; w <= 6; ++w) {
        CHECK(dp.F[w] >= dp.F1[w]);
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("extending w_max keeps earlier entries") {
  const auto seed = testing::shipped_seed("u314");
  const auto a = compute_spectrum(seed, 8);
  const auto b = compute_spectrum(seed, 12);
  for (std::size_t w = 0; w <= 8; ++w) {
    CHECK(a.F[w] == b.F[w]);
    CHECK(a.F1[w] == b.F1[w]);
  }
}

TEST_CASE("counter overflow is reported") {
  CHECK_THROWS_AS(compute_spectrum(testing::shipped_seed("u214"), 60), BudgetError);
}

TEST_CASE("csv output") {
  const auto s = compute_spectrum(testing::shipped_seed("u313"), 5);
  CHECK(s.to_csv() == "w,F,F1\n0,0,0\n1,0,0\n2,0,0\n3,0,0\n4,1,0\n5,11,0\n");
}
