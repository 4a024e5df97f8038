#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ppm/twisted.hpp"

namespace ppm {

// Generator order of the shipped Floer data file.
enum FloerGen { kEL = 0, kX, kY, kZ, kXb, kYb, kZb, kFL };

enum class Convention { AppendixA, CfkosSubst };
Convention parse_convention(const std::string& s);  // "appendixA" | "cfkos-subst"
std::string to_string(Convention c);

// AppendixA: the shipped two-label transcription. CfkosSubst: the Floer
// matrix with (x', y', z') replaced by (chi(g_a)^-1 x, chi(g_b)^-1 y, chi(g_c)^-1 z).
TwistedComplex cf_curve_data(const CoverSpec& spec, Convention conv = Convention::AppendixA);

// The two-variable Floer matrix in the basis (f_L, X, Y, Z, e_L, Xb, Yb, Zb);
// entry [row][col] is the coefficient of row in d(col), as text in x..z'.
const std::vector<std::vector<std::string>>& cfkos_matrix();
// Signed monomial terms of a matrix entry (primed variables are 3, 4, 5).
std::vector<std::pair<long, Mono>> parse_matrix_entry(const std::string& s);
// Floer generator of each matrix row/column.
int cfkos_basis_gen(int index);

// True for variables i with chi(g_i) = 1.
std::array<bool, 3> fixed_variables(const CoverSpec& spec, const Character& chi);

struct SpecialCocycle {
  std::string name;  // P, Q, R, U, V, W
  Chain value;
  int degree = 0;
  bool closed = false;
  bool expected_closed = false;
};

// P_chi, Q_chi, R_chi (odd) and U_chi, V_chi, W_chi (even), with flags from d_chi.
std::vector<SpecialCocycle> special_cocycles(TwistedPtr cf, const Character& chi);

// eta on Floer generators: (sign, theta mask) with eta(g) = sign * theta_mask.
std::pair<int, unsigned> eta(int floer_gen);

// tau: keep maximal-degree generators, restrict to Fix(chi), apply eta.
// Result keys: gen = theta mask, mono in x, y, z.
Chain tau_map(const TwistedComplex& cf, const Character& chi, const Chain& c);

// Partial untwisted m2 table extended bilinearly; nullopt = Undefined.
std::optional<Chain> m2_partial(const Chain& u, const Chain& v);

struct ConventionRow {
  std::string generator;
  std::string appendix_a;
  std::string cfkos_subst;
  std::string relation;  // "equal", "negated", "differ"
};
struct ConventionReport {
  std::string chi;
  std::vector<ConventionRow> rows;
  std::vector<int> hilbert_appendix_a;
  std::vector<int> hilbert_cfkos_subst;
};
ConventionReport compare_conventions(const CoverSpec& spec, const Character& chi, int cutoff);

}  // namespace ppm
