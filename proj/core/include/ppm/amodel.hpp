#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppm/twisted.hpp"

namespace ppm {

// Generators of the log-cohomology model: e, f1, f2, e_a t_a^n, f_a t_a^n.
struct LogGenerator {
  enum class Kind { E, F1, F2, ETower, FTower };
  Kind kind = Kind::E;
  int end = 0;  // 0,1,2 = alpha, beta, gamma (towers only)
  int n = 0;    // winding (towers only, n >= 1)

  static LogGenerator e() { return {Kind::E, 0, 0}; }
  static LogGenerator f1() { return {Kind::F1, 0, 0}; }
  static LogGenerator f2() { return {Kind::F2, 0, 0}; }
  static LogGenerator e_tower(int end, int n) { return {Kind::ETower, end, n}; }
  static LogGenerator f_tower(int end, int n) { return {Kind::FTower, end, n}; }
  // Accepts the curve-data names: e, f1, f2, ea3, fg2, ...
  static LogGenerator parse(const std::string& name);

  int degree() const;  // tripled
  Elem weight(const CoverSpec& spec) const;
  std::string name() const;    // curve-data name
  std::string pretty() const;  // e.g. "f_a t_a^2"

  friend auto operator<=>(const LogGenerator&, const LogGenerator&) = default;
};

using LogComb = std::map<LogGenerator, CycNum>;

// Windings n <= n_max; differential labels from the shipped data file.
TwistedComplex sc_curve_data(const CoverSpec& spec, int n_max);

// Every log generator of tripled degree <= cutoff (windings as needed).
std::vector<LogGenerator> log_generators(int cutoff);

// Untwisted product table. The overload with characters throws
// TwistedProductUnsupported unless both are trivial.
LogComb star_product(const LogGenerator& u, const LogGenerator& v);
LogComb star_product(const LogGenerator& u, const Character& cu, const LogGenerator& v,
                     const Character& cv);

// Winding cutoff that makes Hilbert functions up to `cutoff` exact.
int default_winding(int cutoff);

// Sector Hilbert function of SH*(P) x chi (all weights, or invariant part only).
std::vector<int> sh_hilbert(const CoverSpec& spec, const Character& chi, int cutoff,
                            bool invariant = false, int n_max = -1);
// Sum over characters of invariant parts, i.e. SH*(X) of the cover.
std::vector<int> sh_hilbert_total(const CoverSpec& spec, int cutoff, int n_max = -1);
// Recomputes with doubled winding cutoff and compares.
bool sh_truncation_stable(const CoverSpec& spec, const Character& chi, int cutoff);

// Chain on an SC complex built from sc_curve_data (constant monomial keys).
Chain log_chain(const TwistedComplex& sc, const LogComb& c);
LogComb log_comb(const TwistedComplex& sc, const Chain& c);

std::string format_comb(const LogComb& c);

}  // namespace ppm
