#include <doctest.h>

#include "qturbo/bits.hpp"
#include "qturbo/errors.hpp"
#include "qturbo/pauli.hpp"
#include "qturbo/rng.hpp"
#include "qturbo/symplectic.hpp"
#include "test_support.hpp"

using namespace qturbo;

namespace {

PauliString random_pauli(std::size_t n, Rng& rng) {
  PauliString p(n);
  for (std::size_t j = 0; j < n; ++j) {
    p.set(j, static_cast<Pauli>(rng.below(4)));
  }
  return p;
}

}  // namespace

TEST_CASE("pauli parsing and printing") {
  const auto p = PauliString::parse("XZY_I");
  CHECK(p.num_qubits() == 5);
  CHECK(p.str() == "XZYII");
  CHECK(p[0] == Pauli::X);
  CHECK(p[2] == Pauli::Y);
  CHECK(PauliString::parse("X:YZ") == PauliString::parse("XYZ"));
  CHECK_THROWS_AS(PauliString::parse("XQ"), ValidationError);
}

TEST_CASE("star product") {
  CHECK(star(PauliString::parse("X"), PauliString::parse("Z")));
  CHECK(!star(PauliString::parse("XZ"), PauliString::parse("ZX")));
  CHECK(star(PauliString::parse("XI"), PauliString::parse("YZ")));
  CHECK_THROWS_AS(star(PauliString::parse("X"), PauliString::parse("XX")), DimensionError);

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_pauli(9, rng);
    const auto b = random_pauli(9, rng);
    const auto c = random_pauli(9, rng);
    CHECK(!star(a, a));
    CHECK(star(a, b) == star(b, a));
    CHECK(star(a + b, c) == (star(a, c) != star(b, c)));
  }
}

TEST_CASE("weight") {
  CHECK(PauliString(4).weight() == 0);
  CHECK(PauliString::parse("XZ").weight() == 2);
  CHECK(PauliString::parse("IYI").weight() == 1);
}

TEST_CASE("xz split") {
  auto [x, z] = PauliString::parse("Y").xz_split();
  CHECK(x.str() == "X");
  CHECK(z.str() == "Z");
  std::tie(x, z) = PauliString::parse("XZY").xz_split();
  CHECK(x.str() == "XIX");
  CHECK(z.str() == "IZZ");
  std::tie(x, z) = PauliString(3).xz_split();
  CHECK(x.is_identity());
  CHECK(z.is_identity());
  const auto [xx, xz] = x.xz_split();
  CHECK(xx == x);
  CHECK(xz.is_identity());
}

TEST_CASE("worked example images") {
  const auto u = testing::toy211_seed().matrix();
  CHECK(u.apply(PauliString::parse("ZII")).str() == "ZII");
  CHECK(u.apply(PauliString::parse("IXI")).str() == "IXX");
  CHECK(u.apply(PauliString::parse("III")).is_identity());
  CHECK(u.apply(PauliString::parse("YYI")).str() == "XZI");
  CHECK(u.inverse().apply(PauliString::parse("IYI")).str() == "ZYX");
  CHECK(u.apply(PauliString::parse("ZZZ")).str() == "IIZ");
}

TEST_CASE("symplectic validation and inverse") {
  CHECK(SymplecticMatrix::identity(3).inverse() == SymplecticMatrix::identity(3));
  BinaryMatrix bad = BinaryMatrix::identity(4);
  bad.set(0, 2, true);
  CHECK_THROWS_AS(SymplecticMatrix{bad}, ValidationError);
  CHECK_THROWS_AS(SymplecticMatrix{BinaryMatrix(3, 3)}, DimensionError);

  Rng rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto u = random_symplectic(n, rng);
      const auto w = u.inverse();
      CHECK(u * w == SymplecticMatrix::identity(n));
      CHECK(w * u == SymplecticMatrix::identity(n));
      const auto a = random_pauli(n, rng);
      const auto b = random_pauli(n, rng);
      CHECK(star(u.apply(a), u.apply(b)) == star(a, b));
      CHECK(u.apply(a + b) == u.apply(a) + u.apply(b));
    }
  }
}

TEST_CASE("subspaces") {
  const std::size_t ambient = 8;
  const Subspace zero(ambient);
  CHECK(zero.orthogonal_complement() == Subspace::full(ambient));

  const auto x1 = PauliString::parse("XIII").bits();
  const auto s = Subspace::span(ambient, {x1});
  CHECK(s.orthogonal_complement().dimension() == ambient - 1);
  CHECK(s.orthogonal_complement().orthogonal_complement() == s);

  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<BitVector> gens;
    for (int g = 0; g < 3; ++g) {
      gens.push_back(random_pauli(4, rng).bits());
    }
    const auto v = Subspace::span(ambient, gens);
    CHECK(v.dimension() + v.orthogonal_complement().dimension() == ambient);
    CHECK(v.orthogonal_complement().orthogonal_complement() == v);
    // Membership agrees with a brute-force span.
    const auto elems = v.elements();
    CHECK(elems.size() == (std::size_t{1} << v.dimension()));
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      BitVector sum(ambient);
      for (int g = 0; g < 3; ++g) {
        if ((mask >> g) & 1U) {
          sum ^= gens[g];
        }
      }
      CHECK(v.contains(sum));
    }
    const auto perp = v.orthogonal_complement();
    for (const auto& e : elems) {
      for (const auto& c : perp.basis()) {
        CHECK(!star(PauliString(e), PauliString(c)));
      }
    }
  }
}

TEST_CASE("binary matrix rank and null space") {
  const auto id = BinaryMatrix::identity(5);
  CHECK(id.rank() == 5);
  CHECK(id.left_null_space().empty());
  BinaryMatrix a(3, 4);
  a.set(0, 0, true);
  a.set(1, 0, true);
  a.set(2, 3, true);
  CHECK(a.rank() == 2);
  const auto null = a.left_null_space();
  REQUIRE(null.size() == 1);
  CHECK(!a.left_multiply(null[0]).any());
}
