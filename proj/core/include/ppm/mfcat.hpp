#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ppm/chain.hpp"
#include "ppm/koszul.hpp"

namespace ppm {

// Diagonal action on (x, y, z): h . x_i = h[i] x_i.
using Twist = std::array<CycNum, 3>;
Twist twist_of(const CoverSpec& spec, const Character& chi);
Twist identity_twist();
Twist operator*(const Twist& a, const Twist& b);

// Operators on the rank-8 module over C[x, y, z, x', y', z']:
// sums of coefficient * monomial * Clifford word, stored as a Chain with
// key.gen = word id (see clifford.hpp) and 6-variable key.mono.
using HomChain = Chain;

int hom_degree(const Key& k);  // |I| - |J| + 2 deg(mono)
int hom_parity(const HomChain& h);  // parity of the first term; -1 for 0
HomChain hom_identity();
HomChain compose(const HomChain& a, const HomChain& b);

// The twisted diagonal factorization of xyz boxminus xyz:
// sum (x_i' - h_i x_i) th_i + nabla_i W (h x, x') d_i.
HomChain build_delta(const Twist& h);
// Checks d^2 = (x'y'z' - xyz) id; throws PotentialMismatch otherwise.
void check_delta_square(const Twist& h);

// D(phi) = d_t phi - (-1)^|phi| phi d_s for phi : Delta^s -> Delta^t.
HomChain hom_diff(const HomChain& phi, int parity, const Twist& s, const Twist& t);

// x_i' -> chi_i^-1 x_i', th_i -> chi_i th_i, d_i -> chi_i^-1 d_i.
HomChain chi_translate(const HomChain& phi, const Twist& chi);

// Vacuum column with x' = x, restricted to the target Koszul sector.
Chain kos_project(const HomChain& phi, const KoszulSector& target);

// Closed-form lifts for the twist (-1, -1, 1) that fixes z.
HomChain eta_lift_xy();
HomChain eta_lift_xyz();

struct LiftOptions {
  int primed_cutoff = 6;  // maximal degree in x', y', z'
  bool reverse_order = false;  // alternative pivot order (second lift)
};

// Closed phi : Delta^1 -> Delta^h with kos_project(phi) = c, by an exact
// linear solve over a homogeneous slice of operators. Throws NotClosed or
// NoLiftAtCutoff (after one retry at twice the cutoff).
HomChain lift_cocycle_to_hom(const Chain& c, const KoszulSector& sector, const LiftOptions& opt = {});

// psi with D(psi) = target for psi : Delta^s -> Delta^t, if one exists in
// the slice of the given degree (primed degree up to the cutoff).
std::optional<HomChain> solve_d_exact(const HomChain& target, int degree, int parity, const Twist& s,
                                      const Twist& t, int primed_cutoff = 6);

struct CupResult {
  Chain raw;         // kos_project of the composite
  Chain normal;      // class normal form in the product sector
  int degree = 0;
  bool lift_independent = true;  // second lift gives the same class
};

// u cup v = kos((h_v)_* lift(u) o lift(v)), in the sector of chi_u chi_v.
CupResult cup_product(const Chain& u, const KoszulSector& su, const Chain& v, const KoszulSector& sv,
                      bool check_independence = false);

// Same product from precomputed lifts of u (sector su) and v (sector sv).
CupResult cup_from_lifts(const HomChain& lu, const KoszulSector& su, const HomChain& lv,
                         const KoszulSector& sv, int degree);

// Degree of a homogeneous Koszul chain; throws ShapeMismatch otherwise.
int koszul_degree(const Chain& c);

struct TwistedProductRow {
  std::string name;
  Chain expected;
  Chain via_solver;
  Chain via_closed_form;
  bool raw_match = false;    // solver output equals expected on the nose
  bool class_match = false;  // equal modulo boundaries
};
// The three products of the two twisted classes on a cover whose character
// twist is (-1, -1, 1); throws ShapeMismatch if the cover has none.
std::vector<TwistedProductRow> twisted_product_table(const CoverSpec& spec);

struct MatrixCompareEntry {
  int row = 0, col = 0;
  // relation: equal | negated | equal at x'=x | negated at x'=x | differ
  std::string delta, floer, relation;
};
// Delta^1 written in the eta-relabelled Floer basis, entry by entry against
// the Floer matrix.
std::vector<MatrixCompareEntry> compare_delta_with_floer_matrix();

// 8x8 entry table with Clifford-word row and column labels.
std::string dump_factorization(const HomChain& d);

std::string format_hom(const HomChain& h);
std::string format_koszul(const Chain& c);

}  // namespace ppm
