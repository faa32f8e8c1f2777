#include <doctest.h>

#include <cmath>

#include "qturbo/channel.hpp"
#include "qturbo/errors.hpp"

using namespace qturbo;

TEST_CASE("depolarizing priors") {
  const auto ch = PauliChannel::depolarizing(0.12);
  const auto pr = ch.priors(3);
  REQUIRE(pr.size() == 3);
  CHECK(pr[1][0] == doctest::Approx(0.88));
  CHECK(pr[1][3] == doctest::Approx(0.04));
  CHECK(PauliChannel::depolarizing(0.0).priors(1)[0] == PauliDistribution{1, 0, 0, 0});
  const PauliChannel mix(PauliDistribution{0.9, 0.1, 0, 0});
  CHECK(mix.priors(1)[0] == PauliDistribution{0.9, 0.1, 0, 0});
  CHECK_THROWS_AS(PauliChannel::depolarizing(1.5), ValidationError);
  CHECK_THROWS_AS(PauliChannel(PauliDistribution{0.5, 0.1, 0, 0}), ValidationError);
  CHECK_THROWS_AS(PauliChannel(PauliDistribution{1.1, -0.1, 0, 0}), ValidationError);
}

TEST_CASE("sampling extremes") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    CHECK(PauliChannel::depolarizing(0.0).sample(50, rng).is_identity());
    CHECK(PauliChannel::depolarizing(1.0).sample(50, rng).weight() == 50);
  }
  const PauliChannel only_x(PauliDistribution{0.5, 0.5, 0, 0});
  for (int t = 0; t < 20; ++t) {
    const auto p = only_x.sample(40, rng);
    for (std::size_t j = 0; j < 40; ++j) {
      CHECK((p[j] == Pauli::I || p[j] == Pauli::X));
    }
  }
}

TEST_CASE("sampled weight mean") {
  Rng rng(2024);
  const auto ch = PauliChannel::depolarizing(0.1);
  double total = 0.0;
  const int draws = 100000;
  for (int t = 0; t < draws; ++t) {
    total += static_cast<double>(ch.sample(100, rng).weight());
  }
  CHECK(std::abs(total / draws - 10.0) < 0.3);
}

TEST_CASE("two-qubit chi-square goodness of fit") {
  Rng rng(77);
  const PauliChannel ch(PauliDistribution{0.7, 0.1, 0.15, 0.05});
  std::vector<double> counts(16, 0.0);
  const int draws = 100000;
  for (int t = 0; t < draws; ++t) {
    counts[ch.sample(2, rng).packed(0, 2)] += 1.0;
  }
  double chi2 = 0.0;
  for (std::uint64_t v = 0; v < 16; ++v) {
    const double expected = draws * ch.probability(PauliString::from_packed(2, v));
    chi2 += (counts[v] - expected) * (counts[v] - expected) / expected;
  }
  // 0.99 quantile of chi-square with 15 degrees of freedom.
  CHECK(chi2 < 30.578);
}

TEST_CASE("per-qubit tables") {
  const auto ch = PauliChannel::from_json(
      R"({"type": "product", "table": [[1,0,0,0],[0,0,1,0]]})");
  Rng rng(3);
  CHECK(ch.sample(2, rng).str() == "IY");
  CHECK_THROWS_AS(ch.sample(3, rng), DimensionError);
  CHECK(PauliChannel::from_json(R"({"type": "depolarizing", "p": 0.3})").priors(1)[0][2] ==
        doctest::Approx(0.1));
  CHECK_THROWS_AS(PauliChannel::from_json(R"({"type": "erasure"})"), ValidationError);
  CHECK_THROWS_AS(PauliChannel::from_json("[]"), ValidationError);
}

TEST_CASE("hashing bound") {
  CHECK(std::abs(hashing_rate(0.16024) - 1.0 / 9.0) < 1e-3);
  CHECK(std::abs(hashing_rate(0.12689) - 0.25) < 1e-3);
  CHECK(hashing_rate(1e-9) > 0.9999);
  CHECK(hashing_rate(0.05) > hashing_rate(0.1));
  CHECK(hashing_threshold(1.0 / 9.0) == doctest::Approx(0.16024).epsilon(1e-3));
  CHECK_THROWS_AS(hashing_rate(0.0), ValidationError);
}
