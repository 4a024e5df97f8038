#include <set>

#include "doctest.h"
#include "ppm/amodel.hpp"
#include "ppm/error.hpp"
#include "ppm/floer.hpp"
#include "ppm/twisted.hpp"
#include "support.hpp"

using namespace ppm;

namespace {

const Mono x = Mono::var(0), y = Mono::var(1), z = Mono::var(2), one = Mono::one();

Chain terms(const TwistedComplex& c, std::initializer_list<std::tuple<const char*, Mono, CycNum>> t) {
  Chain out;
  for (const auto& [g, m, v] : t) chain_add(out, c.key(g, m), v);
  return out;
}

TwistedPtr cf_ptr(const CoverSpec& s) { return std::make_shared<TwistedComplex>(cf_curve_data(s)); }
TwistedPtr sc_ptr(const CoverSpec& s, int n = 12) { return std::make_shared<TwistedComplex>(sc_curve_data(s, n)); }

}  // namespace

TEST_CASE("untwisted Floer differential") {
  const CoverSpec spec = CoverSpec::trivial();
  auto cf = cf_ptr(spec);
  const SectorComplex s(cf, enumerate_characters(spec.group()).front());
  CHECK(s.diff(cf->key("X")) == terms(*cf, {{"eL", y * z, 1}}));
  CHECK(s.diff(cf->key("eL")).empty());
  CHECK(s.diff(cf->key("Zb")) == terms(*cf, {{"X", z * x, 1}, {"Y", z * y, -1}}));
  CHECK(s.diff(cf->key("Xb")) == terms(*cf, {{"Y", x * y, 1}, {"Z", x * z, -1}}));
  CHECK(s.diff(cf->key("fL")) == terms(*cf, {{"Zb", x * y, 1}, {"Xb", y * z, 1}, {"Yb", z * x, 1}}));
}

TEST_CASE("Z2 twisted Floer differential") {
  const CoverSpec spec = CoverSpec::parse("Z2", "1", "1");
  auto cf = cf_ptr(spec);
  const SectorComplex s(cf, enumerate_characters(spec.group())[1]);
  CHECK(s.diff(cf->key("eL")) == terms(*cf, {{"X", x, 2}, {"Y", y, 2}}));
  CHECK(s.diff(cf->key("Xb")) == terms(*cf, {{"fL", x, -2}, {"Y", x * y, -1}, {"Z", x * z, -1}}));
}

TEST_CASE("d squared vanishes and degrees are homogeneous in every sector") {
  std::vector<CoverSpec> covers = test::test_covers();
  covers.push_back(CoverSpec::trivial());
  for (const CoverSpec& spec : covers) {
    auto cf = cf_ptr(spec);
    auto sc = sc_ptr(spec);
    for (const Character& chi : enumerate_characters(spec.group())) {
      CAPTURE(spec.str());
      CAPTURE(chi.str());
      const SectorComplex a(cf, chi), b(sc, chi);
      CHECK_FALSE(find_d_squared_failure(a, 24).has_value());
      CHECK_FALSE(find_d_squared_failure(b, 24).has_value());
      CHECK_FALSE(find_degree_failure(a, 24).has_value());
      CHECK_FALSE(find_degree_failure(b, 24).has_value());
    }
  }
}

TEST_CASE("Floer sector Hilbert functions") {
  auto h = [](const CoverSpec& spec, int chi) {
    return cohomology_hilbert(build_sector(cf_ptr(spec), enumerate_characters(spec.group())[chi]), 12);
  };
  CHECK(h(CoverSpec::trivial(), 0) == std::vector<int>{1, 0, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3});
  CHECK(h(CoverSpec::parse("Z2", "1", "1"), 1) == std::vector<int>{0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(h(CoverSpec::parse("Z3", "1", "1"), 1) == std::vector<int>{0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  auto cf = cf_ptr(CoverSpec::trivial());
  CHECK_THROWS_AS(cohomology_hilbert(build_sector(cf, enumerate_characters(cf->spec().group())[0]), 2), Error);
}

TEST_CASE("invariant subcomplex") {
  const CoverSpec z2 = CoverSpec::parse("Z2", "1", "1");
  auto cf = cf_ptr(z2);
  const auto chars = enumerate_characters(z2.group());
  const SectorComplex inv = invariant_subcomplex(cf, chars[0]);
  const auto b2 = inv.basis(2);
  const std::set<Key> got(b2.begin(), b2.end());
  CHECK(got == std::set<Key>{cf->key("eL", z), cf->key("Zb")});

  // Trivial group: the invariant part is everything.
  const CoverSpec t = CoverSpec::trivial();
  auto cft = cf_ptr(t);
  const Character one = enumerate_characters(t.group()).front();
  for (int d = 0; d <= 12; ++d) CHECK(invariant_subcomplex(cft, one).basis(d) == build_sector(cft, one).basis(d));
}

TEST_CASE("unit of SH(X) is the only invariant degree-0 class") {
  for (const CoverSpec& spec : test::test_covers()) {
    auto sc = sc_ptr(spec, 4);
    int total = 0;
    for (const Character& chi : enumerate_characters(spec.group()))
      total += cohomology_hilbert(invariant_subcomplex(sc, chi), 6)[0];
    CHECK(total == 1);
  }
}

TEST_CASE("Psi intertwines, inverts and is equivariant") {
  CHECK_NOTHROW(lift_cover_and_psi(cf_ptr(CoverSpec::parse("Z2", "1", "1"))).psi->verify(12));
  CHECK_NOTHROW(lift_cover_and_psi(sc_ptr(CoverSpec::parse("Z3", "1", "1"), 6)).psi->verify(12));
  CHECK_NOTHROW(lift_cover_and_psi(cf_ptr(CoverSpec::parse("Z2xZ2", "1,0", "0,1"))).psi->verify(9));

  // Trivial group: Psi is the identity on chains.
  auto cf = cf_ptr(CoverSpec::trivial());
  const LiftedCover lc = lift_cover_and_psi(cf);
  const Key k = lc.upstairs->basis(3).front();
  const Chain c{{k, CycNum(1)}};
  const auto down = lc.psi->forward(c);
  REQUIRE(down.size() == 1);
  CHECK(down.begin()->second.size() == 1);
  CHECK(lc.psi->inverse(down) == c);
}

TEST_CASE("a corrupted curve sign is detected") {
  const CoverSpec spec = CoverSpec::parse("Z2", "1", "1");
  auto good = cf_curve_data(spec);
  auto bad = std::make_shared<TwistedComplex>(spec, true, "bad");
  for (const Generator& g : good.generators()) bad->add_generator(g.name, g.degree, g.weight);
  bool flipped = false;
  for (CurveDatum c : good.curves()) {
    if (!flipped && !spec.group().is_zero(c.label)) {
      c.sign = -c.sign;  // keeps degree and weight, breaks d^2 = 0
      flipped = true;
    }
    bad->add_curve(c);
  }
  const auto chars = enumerate_characters(spec.group());
  bool broken = false;
  for (const Character& chi : chars) broken = broken || find_d_squared_failure(SectorComplex(bad, chi), 12).has_value();
  CHECK(broken);
}

TEST_CASE("sector sum rule on every test cover") {
  for (const CoverSpec& spec : test::test_covers()) {
    CAPTURE(spec.str());
    const SectorSum a = sector_sum_rule(cf_ptr(spec), 24);
    CHECK(a.upstairs == a.sector_sum);
    const SectorSum b = sector_sum_rule(sc_ptr(spec), 24);
    CHECK(b.upstairs == b.sector_sum);
  }
}

TEST_CASE("curve data text round trip") {
  const CoverSpec spec = CoverSpec::parse("Z2xZ4", "1,0", "0,1");
  for (const TwistedComplex& c : {cf_curve_data(spec), sc_curve_data(spec, 3)}) {
    const std::string text = c.serialize();
    const TwistedComplex back = TwistedComplex::parse(text, spec);
    CHECK(back.serialize() == text);
    CHECK(back.generators().size() == c.generators().size());
    CHECK(back.curves().size() == c.curves().size());
  }
}

TEST_CASE("load-time assertions") {
  const CoverSpec spec = CoverSpec::parse("Z2", "1", "1");
  TwistedComplex c(spec, true, "t");
  const int a = c.add_generator("a", 0, spec.group().zero());
  const int b = c.add_generator("b", 3, spec.group().zero());
  const int w = c.add_generator("w", 3, spec.g_alpha());
  CHECK_NOTHROW(c.add_curve({a, b, 1, Mono::one(), spec.group().zero()}));
  CHECK_THROWS_AS(c.add_curve({a, b, 1, x, spec.group().zero()}), Error);    // degree
  CHECK_THROWS_AS(c.add_curve({a, w, 1, Mono::one(), spec.group().zero()}), Error);  // weight
  CHECK_THROWS_AS(c.add_generator("a", 0, spec.group().zero()), Error);
  CHECK_THROWS_AS(TwistedComplex::parse("name q\npolynomial yes\ngen a 0 0\na zz 1 1 0\n", spec), Error);
}
