#include "doctest.h"
#include "ppm/floer.hpp"
#include "ppm/koszul.hpp"
#include "support.hpp"

using namespace ppm;

namespace {

const Mono x = Mono::var(0), y = Mono::var(1), z = Mono::var(2), one = Mono::one();

Key fk(int g, const Mono& m = one) { return Key{g, 0, m}; }

TwistedPtr cf_ptr(const CoverSpec& s, Convention c = Convention::AppendixA) {
  return std::make_shared<TwistedComplex>(cf_curve_data(s, c));
}

const SpecialCocycle& find(const std::vector<SpecialCocycle>& v, const std::string& name) {
  for (const SpecialCocycle& c : v)
    if (c.name == name) return c;
  throw std::runtime_error("missing cocycle " + name);
}

}  // namespace

TEST_CASE("special cocycle flags on every test cover") {
  for (const CoverSpec& spec : test::test_covers()) {
    auto cf = cf_ptr(spec);
    for (const Character& chi : enumerate_characters(spec.group())) {
      if (chi.is_trivial()) continue;
      CAPTURE(spec.str());
      CAPTURE(chi.str());
      for (const SpecialCocycle& c : special_cocycles(cf, chi)) {
        CAPTURE(c.name);
        CHECK(c.closed == c.expected_closed);
      }
      for (const char* n : {"P", "Q", "R"}) CHECK(find(special_cocycles(cf, chi), n).closed);
    }
  }
}

TEST_CASE("Z2 cocycles") {
  const CoverSpec z2 = CoverSpec::parse("Z2", "1", "1");
  const auto cs = special_cocycles(cf_ptr(z2), enumerate_characters(z2.group())[1]);
  CHECK_FALSE(find(cs, "U").closed);
  CHECK(find(cs, "W").closed);
}

TEST_CASE("P is exact when chi fixes x") {
  const CoverSpec spec = CoverSpec::parse("Z2xZ2", "1,0", "0,1");
  auto cf = cf_ptr(spec);
  int seen = 0;
  for (const Character& chi : enumerate_characters(spec.group())) {
    if (chi.is_trivial() || !chi(spec.g_alpha()).is_one()) continue;
    ++seen;
    const auto cs = special_cocycles(cf, chi);
    const SpecialCocycle& p = find(cs, "P");
    CHECK(is_exact(build_sector(cf, chi), p.value, 3));
  }
  CHECK(seen == 1);
}

TEST_CASE("tau examples") {
  const CoverSpec z2 = CoverSpec::parse("Z2", "1", "1");
  auto cf = cf_ptr(z2);
  const Character chi = enumerate_characters(z2.group())[1];
  for (int k = 0; k < 4; ++k) {
    const Mono zk = Mono::var(2, k);
    CHECK(tau_map(*cf, chi, {{fk(kFL, zk), CycNum(1)}}) == koszul_word(7u, zk, CycNum(-1)));
  }
  const auto cs = special_cocycles(cf, chi);
  const SpecialCocycle& w = find(cs, "W");
  const CycNum coef = chi(z2.g_gamma()).inv() - chi(z2.g_alpha());
  CHECK(tau_map(*cf, chi, w.value) == koszul_word(3u, one, -coef));
  const CoverSpec t = CoverSpec::trivial();
  CHECK(tau_map(cf_curve_data(t), enumerate_characters(t.group())[0], {{fk(kEL), CycNum(1)}}) == koszul_word(0u));
}

TEST_CASE("tau sends shipped cocycles to Koszul cocycles") {
  for (const CoverSpec& spec : test::test_covers()) {
    auto cf = cf_ptr(spec);
    for (const Character& chi : enumerate_characters(spec.group())) {
      if (chi.is_trivial()) continue;
      const KoszulSector kos(spec, chi);
      for (const SpecialCocycle& c : special_cocycles(cf, chi)) {
        if (!c.closed) continue;
        for (const Mono& m : {one, x, y, z}) {
          Chain shifted;
          for (const auto& [k, v] : c.value) chain_add(shifted, Key{k.gen, 0, k.mono * m}, v);
          const Chain t = kos.restrict(tau_map(*cf, chi, shifted));
          CHECK(kos.apply(t).empty());
        }
      }
    }
  }
}

TEST_CASE("partial product table") {
  const Chain a{{fk(kY, y), CycNum(1)}, {fk(kZ, z), CycNum(-1)}};
  const Chain b{{fk(kX, x), CycNum(1)}, {fk(kY, y), CycNum(-1)}};
  auto ab = m2_partial(a, b);
  REQUIRE(ab.has_value());
  CHECK(*ab == Chain{{fk(kZb, x * y), CycNum(-1)}, {fk(kYb, z * x), CycNum(-1)}, {fk(kXb, y * z), CycNum(-1)}});
  // ... which is -d(f_L) in the untwisted sector.
  const CoverSpec t = CoverSpec::trivial();
  auto cf = cf_ptr(t);
  CHECK(*ab == chain_scaled(build_sector(cf, enumerate_characters(t.group())[0]).diff(fk(kFL)), CycNum(-1)));
  auto bb = m2_partial(b, b);
  REQUIRE(bb.has_value());
  CHECK(*bb == Chain{{fk(kEL, x * y * z), CycNum(-1)}});
  CHECK(m2_partial({{fk(kEL), CycNum(1)}}, {{fk(kX), CycNum(1)}}) == Chain{{fk(kX), CycNum(1)}});
  CHECK_FALSE(m2_partial({{fk(kXb), CycNum(1)}}, {{fk(kYb), CycNum(1)}}).has_value());
  CHECK_FALSE(m2_partial({{fk(kX), CycNum(1)}}, {{fk(kZ), CycNum(1)}}).has_value());
}

TEST_CASE("eta identification signs") {
  CHECK(eta(kEL) == std::pair<int, unsigned>{1, 0u});
  CHECK(eta(kX) == std::pair<int, unsigned>{1, 1u});
  CHECK(eta(kFL) == std::pair<int, unsigned>{-1, 7u});
  CHECK(eta(kXb) == std::pair<int, unsigned>{-1, 6u});
}

TEST_CASE("both Floer conventions give complexes with the same cohomology") {
  for (const CoverSpec& spec : test::test_covers()) {
    auto cf = cf_ptr(spec, Convention::CfkosSubst);
    for (const Character& chi : enumerate_characters(spec.group())) {
      CHECK_FALSE(find_d_squared_failure(build_sector(cf, chi), 12).has_value());
      const ConventionReport r = compare_conventions(spec, chi, 12);
      CHECK(r.rows.size() == 8);
      CHECK(r.hilbert_appendix_a == r.hilbert_cfkos_subst);
    }
  }
}

TEST_CASE("convention tokens") {
  CHECK(parse_convention("appendixA") == Convention::AppendixA);
  CHECK(parse_convention("cfkos-subst") == Convention::CfkosSubst);
  CHECK(to_string(Convention::CfkosSubst) == "cfkos-subst");
  CHECK_THROWS(parse_convention("other"));
}
