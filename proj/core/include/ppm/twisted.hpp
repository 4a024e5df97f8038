#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ppm/chain.hpp"
#include "ppm/group.hpp"

namespace ppm {

struct Generator {
  std::string name;
  int degree = 0;  // tripled degree
  Elem weight;
  int parity() const { return degree & 1; }
};

// One contributing curve: d(input) gets sign * chi(label) * mono * output.
struct CurveDatum {
  int input = 0;
  int output = 0;
  long sign = 1;
  Mono mono;
  Elem label;
};

class TwistedComplex {
 public:
  // polynomial: basis elements are monomial * generator (Floer side);
  // otherwise generators alone (symplectic cochains).
  TwistedComplex(CoverSpec spec, bool polynomial, std::string name = "");

  // Curve-data text. Lines:
  //   gen <name> <degree-expr> <weight-expr>
  //   <input> <output> <sign> <monomial tokens...> <label-expr>
  // Expressions combine integers, n, ga, gb, gg with + - *, or a tuple
  // "(a,b)" in invariant-factor coordinates. Lines containing "{n}" are
  // expanded for n = 1..n_max. '#' starts a comment; "polynomial yes|no"
  // and "name <text>" set the header.
  static TwistedComplex parse(const std::string& text, const CoverSpec& spec, int n_max = 0);
  std::string serialize() const;

  int add_generator(const std::string& name, int degree, const Elem& weight);
  // Asserts degree(output) + degree(mono) = degree(input) + 3 and weight balance.
  void add_curve(const CurveDatum& c);

  const CoverSpec& spec() const { return spec_; }
  const std::string& name() const { return name_; }
  bool polynomial() const { return polynomial_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<CurveDatum>& curves() const { return curves_; }
  const std::vector<int>& curves_from(int gen) const { return from_[gen]; }
  int gen_index(const std::string& name) const;  // -1 if absent

  std::vector<Key> slice_basis(int degree, const std::optional<Elem>& weight = std::nullopt) const;
  int key_degree(const Key& k) const;
  Elem key_weight(const Key& k) const;
  std::string key_label(const Key& k) const;
  Key key(const std::string& gen, const Mono& m = Mono::one()) const;

 private:
  CoverSpec spec_;
  bool polynomial_;
  std::string name_;
  std::vector<Generator> gens_;
  std::vector<CurveDatum> curves_;
  std::vector<std::vector<int>> from_;
  std::map<std::string, int> by_name_;
};

using TwistedPtr = std::shared_ptr<const TwistedComplex>;

// The chi-sector: d_chi(p) = sum over curves from p of sign*chi(label)*mono*output.
// With a weight, only that weight space (weight 0 = invariant subcomplex).
class SectorComplex : public ChainView {
 public:
  SectorComplex(TwistedPtr c, Character chi, std::optional<Elem> weight = std::nullopt);

  std::vector<Key> basis(int degree) const override;
  Chain diff(const Key& k) const override;
  int degree_of(const Key& k) const override { return c_->key_degree(k); }
  Elem weight_of(const Key& k) const override { return c_->key_weight(k); }
  std::string label(const Key& k) const override { return c_->key_label(k); }

  const TwistedComplex& complex() const { return *c_; }
  const Character& character() const { return chi_; }
  const std::optional<Elem>& weight() const { return weight_; }

  // Human-readable dump of d_chi on generators (constant monomial).
  std::string dump() const;

 private:
  TwistedPtr c_;
  Character chi_;
  std::optional<Elem> weight_;
  std::vector<CycNum> coef_;
};

SectorComplex build_sector(TwistedPtr c, const Character& chi);
SectorComplex invariant_subcomplex(TwistedPtr c, const Character& chi);

// Complex on the cover: basis (weight-0 downstairs basis element a, g in G),
// with a_g -> sign * (mono * b)_{g + label}. Integer coefficients.
class UpstairsComplex : public ChainView {
 public:
  explicit UpstairsComplex(TwistedPtr c);
  std::vector<Key> basis(int degree) const override;
  Chain diff(const Key& k) const override;
  int degree_of(const Key& k) const override { return c_->key_degree(k); }
  Elem weight_of(const Key& k) const override;  // the G-index as an element
  std::string label(const Key& k) const override;

  // Free G-action: h . a_g = a_{g+h}.
  Key act(const Elem& h, const Key& k) const;
  const std::vector<Elem>& elements() const { return elems_; }

 private:
  TwistedPtr c_;
  std::vector<Elem> elems_;
};

// Averaging isomorphism between the upstairs complex and the invariant parts
// of the sectors: Psi(a_g) = sum_chi chi(g) (a x chi) / |G|.
class Psi {
 public:
  using SectorChain = std::map<int, Chain>;  // character index -> chain

  explicit Psi(TwistedPtr c);
  SectorChain forward(const Chain& up) const;
  Chain inverse(const SectorChain& down) const;
  const std::vector<Character>& characters() const { return chars_; }

  // Checks, degreewise to the cutoff: Psi d_up = d_G Psi, Psi^-1 Psi = id,
  // Psi Psi^-1 = id, and G-equivariance. Throws IntertwiningFailure naming
  // the first failing slice.
  void verify(int cutoff) const;

 private:
  TwistedPtr c_;
  UpstairsComplex up_;
  std::vector<Character> chars_;
  std::vector<SectorComplex> sectors_;
};

struct LiftedCover {
  std::shared_ptr<UpstairsComplex> upstairs;
  std::shared_ptr<Psi> psi;
};
LiftedCover lift_cover_and_psi(TwistedPtr c);

struct SectorSum {
  std::vector<int> upstairs;
  std::vector<int> sector_sum;
  std::vector<std::vector<int>> per_sector;  // invariant part of each sector
};
SectorSum sector_sum_rule(TwistedPtr c, int cutoff);

}  // namespace ppm
