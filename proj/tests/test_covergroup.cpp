#include <numeric>

#include "doctest.h"
#include "ppm/error.hpp"
#include "ppm/group.hpp"
#include "support.hpp"

using namespace ppm;

TEST_CASE("character enumeration") {
  const FinAbGroup z2 = FinAbGroup::parse("Z2");
  auto c2 = enumerate_characters(z2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].is_trivial());
  CHECK(c2[1](z2.normalize({1})) == CycNum(-1));
  CHECK(enumerate_characters(FinAbGroup::parse("Z2xZ2")).size() == 4);

  const FinAbGroup z3 = FinAbGroup::parse("Z3");
  auto c3 = enumerate_characters(z3);
  REQUIRE(c3.size() == 3);
  CHECK(c3[1](z3.normalize({1})) == CycNum::root_of_unity(3, 1));
  CHECK(c3[2](z3.normalize({1})) == CycNum::root_of_unity(3, 2));
}

TEST_CASE("group tokens round trip") {
  for (const char* t : {"Z2", "Z6", "Z2xZ4", "Z3xZ3"}) CHECK(FinAbGroup::parse(t).str() == t);
  CHECK(FinAbGroup::parse("Z2xZ3").order() == 6);
  CHECK(FinAbGroup::parse("Z2xZ3").invariant_factors() == std::vector<long>{6});
}

TEST_CASE("characters are multiplicative and orthogonal") {
  for (const CoverSpec& spec : test::test_covers()) {
    const FinAbGroup& G = spec.group();
    const auto chars = enumerate_characters(G);
    CHECK(chars.size() == static_cast<size_t>(G.order()));
    CHECK(chars.front().is_trivial());
    for (const Elem& g : G.elements()) {
      CycNum sum;
      for (const Character& chi : chars) {
        sum += chi(g);
        CHECK(chi(G.zero()).is_one());
        for (const Elem& h : G.elements()) CHECK(chi(G.add(g, h)) == chi(g) * chi(h));
      }
      CHECK(sum == (G.is_zero(g) ? CycNum(G.order()) : CycNum()));
    }
  }
}

TEST_CASE("nonzero elements are detected by some character") {
  for (const CoverSpec& spec : test::test_covers())
    for (const Elem& g : spec.group().elements()) {
      if (spec.group().is_zero(g)) continue;
      bool seen = false;
      for (const Character& chi : enumerate_characters(spec.group())) seen = seen || !chi(g).is_one();
      CHECK(seen);
    }
}

TEST_CASE("worked cover invariants") {
  auto z2 = cover_invariants(CoverSpec::parse("Z2", "1", "1"));
  CHECK(z2.genus == 0);
  CHECK(z2.punctures == 4);
  CHECK(z2.per_end[0] == 1);
  CHECK(z2.per_end[1] == 1);
  CHECK(z2.per_end[2] == 2);
  auto z3 = cover_invariants(CoverSpec::parse("Z3", "1", "1"));
  CHECK(z3.genus == 1);
  CHECK(z3.punctures == 3);
  auto z33 = cover_invariants(CoverSpec::parse("Z3xZ3", "1,0", "0,1"));
  CHECK(z33.punctures == 9);
  CHECK(z33.genus == 1);
}

TEST_CASE("closed genus/puncture formula for Zm x Zn") {
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n) {
      const FinAbGroup G = FinAbGroup::from_cyclic({m, n});
      const CoverSpec spec(G, G.from_presentation({1, 0}), G.from_presentation({0, 1}));
      const auto inv = cover_invariants(spec);
      const long g = std::gcd(m, n);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(inv.punctures == m + n + g);
      CHECK(2 * inv.genus == (m - 1) * (n - 1) - g + 1);
      // Independent count: punctures over an end = number of orbits of <g_a>.
      long orbits = 0;
      for (int a = 0; a < 3; ++a) orbits += G.order() / G.element_order(spec.end(a));
      CHECK(orbits == inv.punctures);
    }
}

TEST_CASE("punctures over an end count characters trivial on it") {
  for (const CoverSpec& spec : test::test_covers()) {
    const auto inv = cover_invariants(spec);
    for (int a = 0; a < 3; ++a) {
      long n = 0;
      for (const Character& chi : enumerate_characters(spec.group())) n += chi(spec.end(a)).is_one();
      CHECK(n == inv.per_end[a]);
    }
  }
}

TEST_CASE("cover invariants are symmetric in the three ends") {
  for (const CoverSpec& spec : test::test_covers()) {
    const auto base = cover_invariants(spec);
    const Elem e[3] = {spec.g_alpha(), spec.g_beta(), spec.g_gamma()};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
      const auto inv = cover_invariants(CoverSpec(spec.group(), e[p[0]], e[p[1]], e[p[2]]));
      CHECK(inv.genus == base.genus);
      CHECK(inv.punctures == base.punctures);
    }
  }
}

TEST_CASE("invalid covers are rejected") {
  CHECK_THROWS_AS(CoverSpec::parse("Z4", "2", "2"), Error);
  CHECK_THROWS_AS(CoverSpec::parse("Z2xZ2", "1,0", "1,0"), Error);
  CHECK_THROWS_AS(CoverSpec::parse("Zq", "1", "1"), Error);
  try {
    CoverSpec::parse("Z4", "2", "2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSurjective);
  }
}
