#pragma once

#include <string>
#include <vector>

#include "ppm/cycnum.hpp"

namespace ppm {

using Elem = std::vector<long>;

// Finite abelian group in invariant-factor form d1 | d2 | ... | dr, written additively.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  // Any list of cyclic orders; normalized to invariant factors.
  static FinAbGroup from_cyclic(const std::vector<long>& orders);
  // Parses "Z2xZ4", "Z6", "1" (trivial).
  static FinAbGroup parse(const std::string& token);

  const std::vector<long>& invariant_factors() const { return d_; }
  int rank() const { return static_cast<int>(d_.size()); }
  long order() const;
  long exponent() const { return d_.empty() ? 1 : d_.back(); }

  Elem zero() const { return Elem(d_.size(), 0); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(long k, const Elem& a) const;
  Elem normalize(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  long element_order(const Elem& a) const;
  // All elements in lexicographic order; index_of inverts it.
  std::vector<Elem> elements() const;
  long index_of(const Elem& a) const;

  // Elements written in the coordinates of the original cyclic factors
  // (as passed to from_cyclic / parse) are mapped to invariant-factor coordinates.
  Elem from_presentation(const std::vector<long>& coords) const;
  // Parses "1,0" in the presentation coordinates.
  Elem parse_element(const std::string& text) const;

  std::string str() const;       // e.g. "Z2xZ4", "1" for trivial
  std::string str(const Elem& a) const;  // e.g. "(1,0)"

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.d_ == b.d_; }

 private:
  std::vector<long> d_;
  // Image of the generator of each presentation factor.
  std::vector<Elem> pres_images_;
  std::vector<long> pres_orders_;
};

class Character {
 public:
  Character() = default;
  Character(const FinAbGroup& g, std::vector<long> exponents);

  const FinAbGroup& group() const { return g_; }
  const std::vector<long>& exponents() const { return c_; }
  bool is_trivial() const;

  // chi(g) in Q(zeta_N), N = exponent of the group.
  CycNum operator()(const Elem& g) const;
  // Exponent k with chi(g) = zeta_N^k.
  long log(const Elem& g) const;

  Character operator*(const Character& o) const;
  Character inverse() const;

  std::string str() const;  // e.g. "chi(1,0)"

  friend bool operator==(const Character& a, const Character& b) { return a.c_ == b.c_; }

 private:
  FinAbGroup g_;
  std::vector<long> c_;
};

// Identity first, then lexicographic exponents.
std::vector<Character> enumerate_characters(const FinAbGroup& g);

CycNum char_eval(const Character& chi, const Elem& g);

class CoverSpec {
 public:
  // g_gamma = -(g_alpha + g_beta); throws NonSurjective if <g_alpha, g_beta> != G.
  CoverSpec(FinAbGroup g, Elem g_alpha, Elem g_beta);
  // Accepts an explicit g_gamma; checks the relation and surjectivity.
  CoverSpec(FinAbGroup g, Elem g_alpha, Elem g_beta, Elem g_gamma);

  static CoverSpec trivial();
  // Parses group token and tuples, e.g. ("Z3xZ3", "1,0", "0,1").
  static CoverSpec parse(const std::string& group, const std::string& ga, const std::string& gb);

  const FinAbGroup& group() const { return g_; }
  const Elem& g_alpha() const { return ga_; }
  const Elem& g_beta() const { return gb_; }
  const Elem& g_gamma() const { return gc_; }
  // End a in {0,1,2} = {alpha, beta, gamma}.
  const Elem& end(int a) const { return a == 0 ? ga_ : (a == 1 ? gb_ : gc_); }
  int cyclotomic_order() const { return static_cast<int>(g_.exponent()); }

  std::string str() const;

 private:
  void check() const;
  FinAbGroup g_;
  Elem ga_, gb_, gc_;
};

struct CoverInvariants {
  long genus = 0;
  long punctures = 0;
  long per_end[3] = {0, 0, 0};
};

CoverInvariants cover_invariants(const CoverSpec& spec);

// Subgroup generated by the given elements (as a sorted element list size).
long generated_subgroup_order(const FinAbGroup& g, const std::vector<Elem>& gens);

}  // namespace ppm
