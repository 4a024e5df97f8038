#include "doctest.h"
#include "ppm/koszul.hpp"
#include "support.hpp"

using namespace ppm;

namespace {

const Mono x = Mono::var(0), y = Mono::var(1), z = Mono::var(2), one = Mono::one();

Character nth(const CoverSpec& s, int i) { return enumerate_characters(s.group())[i]; }

}  // namespace

TEST_CASE("sector shapes") {
  const CoverSpec t = CoverSpec::trivial();
  const KoszulSector k1(t, nth(t, 0));
  CHECK(k1.shape() == 1);
  CHECK(k1.differential_text() == "y*z*d_x + x*z*d_y + x*y*d_z");

  const CoverSpec z2 = CoverSpec::parse("Z2", "1", "1");
  const KoszulSector k2(z2, nth(z2, 1));
  CHECK(k2.shape() == 2);
  CHECK(k2.fixed() == std::array<bool, 3>{false, false, true});
  CHECK(k2.differential_text() == "0");
  // C[z] th_x th_y + C[z] th_x th_y th_z
  CHECK(k2.basis(2) == std::vector<Key>{Key{3, 0, one}});
  CHECK(k2.basis(3) == std::vector<Key>{Key{7, 0, one}});
  CHECK(k2.basis(4) == std::vector<Key>{Key{3, 0, z}});

  const CoverSpec z3 = CoverSpec::parse("Z3", "1", "1");
  const KoszulSector k3(z3, nth(z3, 1));
  CHECK(k3.shape() == 3);
  CHECK(k3.basis(3) == std::vector<Key>{Key{7, 0, one}});
  for (int d : {0, 1, 2, 4, 5, 6}) CHECK(k3.basis(d).empty());
}

TEST_CASE("untwisted oracle values") {
  const CoverSpec t = CoverSpec::trivial();
  const KoszulSector k(t, nth(t, 0));
  CHECK(koszul_oracle(k, 0) == 1);
  CHECK(koszul_oracle(k, 4) == 3);
  CHECK(koszul_oracle(k, 3) == 2);
  CHECK(koszul_oracle(k, 5) == 3);
  CHECK(koszul_oracle(k, 1) == 0);
  for (int m = 1; m < 10; ++m) CHECK(lambda_presentation_dim(m) == 3);
  CHECK(lambda_presentation_dim(0) == 2);
}

TEST_CASE("slice cohomology equals the oracle in every sector") {
  std::vector<CoverSpec> covers = test::test_covers();
  covers.push_back(CoverSpec::trivial());
  for (const CoverSpec& spec : covers)
    for (const Character& chi : enumerate_characters(spec.group())) {
      CAPTURE(spec.str());
      CAPTURE(chi.str());
      const KoszulSector k(spec, chi);
      CHECK_FALSE(find_d_squared_failure(k, 24).has_value());
      CHECK(cohomology_hilbert(k, 24) == koszul_oracle_hilbert(k, 24));
    }
}

TEST_CASE("untwisted cohomology vanishes at exterior degrees -2 and -3") {
  const CoverSpec t = CoverSpec::trivial();
  const auto bi = koszul_bigraded_hilbert(KoszulSector(t, nth(t, 0)), 24);
  for (int d = 0; d <= 24; ++d) {
    CHECK(bi[d][2] == 0);
    CHECK(bi[d][3] == 0);
    CHECK(bi[d][0] + bi[d][1] == koszul_oracle(KoszulSector(t, nth(t, 0)), d));
  }
}

TEST_CASE("orbifold Koszul algebra") {
  const CoverSpec t = CoverSpec::trivial();
  CHECK(orbifold_koszul_hilbert(t, 12) == koszul_oracle_hilbert(KoszulSector(t, nth(t, 0)), 12));

  const CoverSpec z2 = CoverSpec::parse("Z2", "1", "1");
  const Elem zero = z2.group().zero();
  // The whole twisted sector is invariant.
  for (int d = 0; d <= 12; ++d) CHECK(KoszulSector(z2, nth(z2, 1), zero).basis(d) == KoszulSector(z2, nth(z2, 1)).basis(d));

  const CoverSpec z3 = CoverSpec::parse("Z3", "1", "1");
  const auto total = orbifold_koszul_hilbert(z3, 12);
  const auto untw = cohomology_hilbert(KoszulSector(z3, nth(z3, 0), z3.group().zero()), 12);
  for (int d = 0; d <= 12; ++d) CHECK(total[d] - untw[d] == (d == 3 ? 2 : 0));
}

TEST_CASE("module action relations") {
  const CoverSpec t = CoverSpec::trivial();
  const KoszulSector k(t, nth(t, 0));
  const Poly px = Poly::var(0), py = Poly::var(1);
  const Chain lx = lambda_class(0), ly = lambda_class(1), lz = lambda_class(2);
  CHECK(module_action(k, px, lx, 3).empty());
  CHECK(module_action(k, py, lx, 3) == module_action(k, -py, lz, 3));
  CHECK(module_action(k, px, ly, 3) == module_action(k, -px, lz, 3));
  CHECK(module_action(k, Poly::constant(CycNum(1)), lz, 3) == class_normal_form(k, lz, 3));
  // Single linear relation among the lambdas.
  Chain sum = lx;
  chain_axpy(sum, CycNum(1), ly);
  chain_axpy(sum, CycNum(1), lz);
  CHECK(sum.empty());
  CHECK(k.apply(lx).empty());
  CHECK_FALSE(is_exact(k, lx, 3));
}
