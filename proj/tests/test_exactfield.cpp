#include <random>

#include "doctest.h"
#include "ppm/cycnum.hpp"
#include "ppm/error.hpp"
#include "ppm/linalg.hpp"

using namespace ppm;

namespace {

CycNum zeta(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

CycNum random_cyc(std::mt19937& rng, int order) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<mpq_class> c(euler_phi(order));
  for (auto& q : c) {
    q = mpq_class(num(rng), den(rng));
    q.canonicalize();
  }
  return CycNum(order, c);
}

}  // namespace

TEST_CASE("field examples") {
  CHECK((CycNum(1) + zeta(3) + zeta(3, 2)).is_zero());
  CHECK(zeta(4) * zeta(4) == CycNum(-1));
  CHECK(zeta(2) == CycNum(-1));
  CHECK(zeta(6, 3) == CycNum(-1));
  const CycNum w = zeta(3);
  CHECK((w * w + w + CycNum(1)).is_zero());
  CHECK(zeta(7, 0).is_one());
}

TEST_CASE("inverse of 1 + zeta_5 against the Euclid oracle") {
  // Phi_5 = (x + 1)(x^3 + x) + 1, so (1 + x)^{-1} = -(x^3 + x) mod Phi_5.
  const CycNum z = zeta(5);
  const CycNum oracle = -(z * z * z) - z;
  const CycNum c = (CycNum(1) + z).inv();
  CHECK(c == oracle);
  CHECK((c * (CycNum(1) + z)).is_one());
}

TEST_CASE("division by zero") { CHECK_THROWS_AS(CycNum().inv(), Error); }

TEST_CASE("roots of unity: inverse pairs and vanishing sums") {
  for (int n = 1; n <= 12; ++n) {
    CycNum sum;
    for (int k = 0; k < n; ++k) {
      CHECK((zeta(n, k) * zeta(n, n - k)).is_one());
      sum += zeta(n, k);
    }
    if (n >= 2) CHECK(sum.is_zero());
  }
}

TEST_CASE("mixed orders lift to a common field") {
  CHECK(zeta(4) * zeta(6) == zeta(12, 5));
  CHECK(zeta(3) + zeta(2) == zeta(6, 2) - CycNum(1));
  CHECK(zeta(6, 2) == zeta(3));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240611);
  const int orders[] = {1, 2, 3, 4, 5, 6, 8, 9, 12};
  for (int trial = 0; trial < 200; ++trial) {
    const CycNum a = random_cyc(rng, orders[rng() % 9]);
    const CycNum b = random_cyc(rng, orders[rng() % 9]);
    const CycNum c = random_cyc(rng, orders[rng() % 9]);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("exact rank and kernel") {
  SliceMatrix zero;
  zero.rows = 3;
  zero.cols = 3;
  zero.columns.assign(3, SVec());
  auto rz = exact_rank_kernel(zero);
  CHECK(rz.rank == 0);
  CHECK(rz.kernel.size() == 3);

  SliceMatrix id = zero;
  for (int i = 0; i < 3; ++i) id.columns[i] = SVec({{i, CycNum(1)}});
  auto ri = exact_rank_kernel(id);
  CHECK(ri.rank == 3);
  CHECK(ri.kernel.empty());
}

TEST_CASE("rank plus nullity on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SliceMatrix m;
    m.rows = 1 + static_cast<int>(rng() % 6);
    m.cols = 1 + static_cast<int>(rng() % 7);
    for (int c = 0; c < m.cols; ++c) {
      std::vector<SVec::Entry> e;
      for (int r = 0; r < m.rows; ++r)
        if (rng() % 3 == 0) e.emplace_back(r, random_cyc(rng, trial % 2 ? 3 : 1));
      m.columns.emplace_back(std::move(e));
    }
    // A repeated column forces a kernel vector.
    m.columns.push_back(m.columns.front());
    ++m.cols;
    auto rk = exact_rank_kernel(m);
    CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == m.cols);
    CHECK(!rk.kernel.empty());
    for (const SVec& k : rk.kernel) CHECK(m.apply(k).is_zero());
  }
}
