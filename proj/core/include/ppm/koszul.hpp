#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppm/chain.hpp"
#include "ppm/group.hpp"

namespace ppm {

// Koszul sector of W = xyz for a character: cochains are theta words
// (key.gen = theta mask, always containing the moved variables) times
// monomials in the fixed variables; tripled degree |I| + 2 deg(mono).
class KoszulSector : public ChainView {
 public:
  // `weight` restricts to one G-weight (zero element = invariant part),
  // with w(x) = g_alpha and w(theta_x) = -g_alpha etc.
  KoszulSector(CoverSpec spec, Character chi, std::optional<Elem> weight = std::nullopt);

  int shape() const;  // 1: chi = 1, 2: one fixed variable, 3: none fixed
  const std::array<bool, 3>& fixed() const { return fixed_; }
  unsigned moved_mask() const { return moved_; }
  const Character& character() const { return chi_; }
  const CoverSpec& spec() const { return spec_; }

  std::vector<Key> basis(int degree) const override;
  Chain diff(const Key& k) const override;
  int degree_of(const Key& k) const override;
  Elem weight_of(const Key& k) const override;
  std::string label(const Key& k) const override;

  // Differential as text, e.g. "yz d_x + xz d_y + xy d_z" or "0".
  std::string differential_text() const;
  // Keeps only terms that live in this sector (moved variables set to 0,
  // words not containing the moved set dropped).
  Chain restrict(const Chain& c) const;

 private:
  CoverSpec spec_;
  Character chi_;
  std::optional<Elem> weight_;
  std::array<bool, 3> fixed_{};
  unsigned moved_ = 0;
  std::array<Chain, 3> partials_;  // d_i W^chi as chains on the empty word
};

// Restriction of a view to the summand of exterior degree k0 at degree d0
// (and k0 - j at degree d0 + 3j); its cohomology at d0 is H^{d0} in that
// exterior degree.
class ExteriorDegreeView : public ChainView {
 public:
  ExteriorDegreeView(const ChainView& base, int d0, int k0) : base_(base), d0_(d0), k0_(k0) {}
  std::vector<Key> basis(int degree) const override;
  Chain diff(const Key& k) const override { return base_.diff(k); }
  int degree_of(const Key& k) const override { return base_.degree_of(k); }
  std::string label(const Key& k) const override { return base_.label(k); }

 private:
  const ChainView& base_;
  int d0_, k0_;
};

// dims[d][k] = dim H^d in exterior degree k, d = 0..cutoff.
std::vector<std::array<int, 4>> koszul_bigraded_hilbert(const KoszulSector& s, int cutoff);

// Closed-form dimensions for the three sector shapes; the odd untwisted
// values come from the lambda-presentation below, not from the Koszul complex.
int koszul_oracle(const KoszulSector& s, int degree);
std::vector<int> koszul_oracle_hilbert(const KoszulSector& s, int cutoff);

// dim of the degree-(3 + 2m) part of the module generated by lambda_x,
// lambda_z over C[x,y,z] with relations x lx, z lz, y(lx + lz) and
// (xy, yz, zx) * {lx, lz}, computed by slice linear algebra.
int lambda_presentation_dim(int m);

// Sum over characters of invariant sector cohomology: Kos(W, G^).
std::vector<int> orbifold_koszul_hilbert(const CoverSpec& spec, int cutoff);

// Multiplies a cocycle by a polynomial in x, y, z (terms outside the sector
// are dropped) and returns the normal form of its class.
Chain module_action(const KoszulSector& s, const Poly& p, const Chain& c, int degree);

// lambda_z = x th_x - y th_y, lambda_x = y th_y - z th_z, lambda_y = z th_z - x th_x.
Chain lambda_class(int i);
Chain koszul_word(unsigned mask, const Mono& m = Mono::one(), const CycNum& c = CycNum(1));

}  // namespace ppm
