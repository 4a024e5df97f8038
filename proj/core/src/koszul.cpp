#include "ppm/koszul.hpp"

#include <bit>

#include "ppm/clifford.hpp"
#include "ppm/error.hpp"
#include "ppm/linalg.hpp"

namespace ppm {

namespace {

const char* kVar[3] = {"x", "y", "z"};

std::string word_name(unsigned mask) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) s += std::string(s.empty() ? "" : " ") + "th_" + kVar[i];
  return s.empty() ? "1" : s;
}

}  // namespace

Chain koszul_word(unsigned mask, const Mono& m, const CycNum& c) {
  Chain r;
  chain_add(r, Key{static_cast<int>(mask), 0, m}, c);
  return r;
}

Chain lambda_class(int i) {
  const int a = (i + 1) % 3, b = (i + 2) % 3;
  // lambda_z = x th_x - y th_y: the two variables other than i, in cyclic order after i.
  Chain r;
  chain_add(r, Key{1 << a, 0, Mono::var(a)}, CycNum(1));
  chain_add(r, Key{1 << b, 0, Mono::var(b)}, CycNum(-1));
  return r;
}

KoszulSector::KoszulSector(CoverSpec spec, Character chi, std::optional<Elem> weight)
    : spec_(std::move(spec)), chi_(std::move(chi)), weight_(std::move(weight)) {
  for (int i = 0; i < 3; ++i) {
    CycNum v = chi_(spec_.end(i));
    fixed_[i] = v.is_one();
    if (!fixed_[i]) moved_ |= 1u << i;
  }
  if (weight_) weight_ = spec_.group().normalize(*weight_);
  if (moved_ == 0) {
    // W = xyz: d_x W = yz, d_y W = xz, d_z W = xy.
    for (int i = 0; i < 3; ++i) {
      Mono m;
      for (int j = 0; j < 3; ++j)
        if (j != i) m.e[j] = 1;
      chain_add(partials_[i], Key{0, 0, m}, CycNum(1));
    }
  }
  // With a moved variable W^chi = 0; two fixed variables would force chi = 1.
}

int KoszulSector::shape() const {
  const int nfixed = std::popcount(7u & ~moved_);
  if (nfixed == 3) return 1;
  if (nfixed == 1) return 2;
  if (nfixed == 0) return 3;
  throw Error(ErrorKind::NonDiagonal, "character fixes exactly two variables");
}

std::vector<Key> KoszulSector::basis(int degree) const {
  std::vector<Key> out;
  std::vector<int> fixed_vars;
  for (int i = 0; i < 3; ++i)
    if (fixed_[i]) fixed_vars.push_back(i);
  for (int k = 0; k < kExtDim; ++k) {
    const unsigned mask = ext_basis_mask(k);
    if ((mask & moved_) != moved_) continue;
    const int rest = degree - std::popcount(mask);
    if (rest < 0 || rest % 2) continue;
    const int md = rest / 2;
    if (fixed_vars.empty()) {
      if (md == 0) out.push_back({static_cast<int>(mask), 0, Mono::one()});
      continue;
    }
    for (const Mono& m3 : monomials_of_degree(static_cast<int>(fixed_vars.size()), md)) {
      Mono m;
      for (size_t j = 0; j < fixed_vars.size(); ++j) m.e[fixed_vars[j]] = m3.e[j];
      out.push_back({static_cast<int>(mask), 0, m});
    }
  }
  if (weight_) std::erase_if(out, [&](const Key& k) { return weight_of(k) != *weight_; });
  return out;
}

Chain KoszulSector::diff(const Key& k) const {
  Chain r;
  const unsigned mask = static_cast<unsigned>(k.gen);
  for (int i = 0; i < 3; ++i) {
    if (partials_[i].empty() || !(mask & (1u << i))) continue;
    auto [sign, target] = word_apply(CliffWord::make(0, 1u << i).id, mask);
    if (!sign) continue;
    for (const auto& [pk, pv] : partials_[i])
      chain_add(r, Key{static_cast<int>(target), 0, pk.mono * k.mono}, pv * CycNum(sign));
  }
  return r;
}

int KoszulSector::degree_of(const Key& k) const {
  return std::popcount(static_cast<unsigned>(k.gen)) + 2 * k.mono.total();
}

Elem KoszulSector::weight_of(const Key& k) const {
  const FinAbGroup& G = spec_.group();
  Elem w = G.zero();
  for (int i = 0; i < 3; ++i) {
    long c = k.mono.e[i] - ((k.gen >> i) & 1);
    if (c) w = G.add(w, G.scale(c, spec_.end(i)));
  }
  return G.normalize(w);
}

std::string KoszulSector::label(const Key& k) const {
  const std::string w = word_name(static_cast<unsigned>(k.gen));
  if (k.mono == Mono::one()) return w;
  if (k.gen == 0) return k.mono.str();
  return k.mono.str() + "*" + w;
}

std::string KoszulSector::differential_text() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (partials_[i].empty()) continue;
    if (!s.empty()) s += " + ";
    s += partials_[i].begin()->first.mono.str() + "*d_" + kVar[i];
  }
  return s.empty() ? "0" : s;
}

Chain KoszulSector::restrict(const Chain& c) const {
  Chain r;
  for (const auto& [k, v] : c) {
    if ((static_cast<unsigned>(k.gen) & moved_) != moved_) continue;
    bool moved_var = false;
    for (int i = 0; i < 3; ++i) moved_var |= !fixed_[i] && k.mono.e[i] > 0;
    for (int i = 3; i < kMaxVars; ++i) moved_var |= k.mono.e[i] > 0;
    if (!moved_var) chain_add(r, k, v);
  }
  return r;
}

std::vector<Key> ExteriorDegreeView::basis(int degree) const {
  const int j = degree - d0_;
  if (j % 3 != 0) return {};
  const int k = k0_ - j / 3;
  std::vector<Key> out;
  for (const Key& key : base_.basis(degree))
    if (std::popcount(static_cast<unsigned>(key.gen)) == k) out.push_back(key);
  return out;
}

std::vector<std::array<int, 4>> koszul_bigraded_hilbert(const KoszulSector& s, int cutoff) {
  if (cutoff < 3) throw Error(ErrorKind::CutoffTooSmall, "cohomology needs cutoff >= 3");
  std::vector<std::array<int, 4>> out(cutoff + 1);
  for (int d = 0; d <= cutoff; ++d)
    for (int k = 0; k < 4; ++k) out[d][k] = slice_cohomology(ExteriorDegreeView(s, d, k), d).dim();
  return out;
}

int lambda_presentation_dim(int m) {
  if (m < 0) return 0;
  // Coordinates: (generator g in {lx = 0, lz = 1}, monomial of degree m).
  const auto monos = monomials_of_degree(3, m);
  std::map<Mono, int> index;
  for (const Mono& mo : monos) index.emplace(mo, static_cast<int>(index.size()));
  const int n = static_cast<int>(monos.size());
  auto coord = [&](int g, const Mono& mo) { return g * n + index.at(mo); };
  // Relation generators as (coefficient, generator, monomial) lists.
  using Rel = std::vector<std::tuple<long, int, Mono>>;
  std::vector<Rel> rels = {
      {{1, 0, Mono::var(0)}},
      {{1, 1, Mono::var(2)}},
      {{1, 0, Mono::var(1)}, {1, 1, Mono::var(1)}},
  };
  for (int g = 0; g < 2; ++g)
    for (const Mono& q : {Mono::var(0) * Mono::var(1), Mono::var(1) * Mono::var(2), Mono::var(0) * Mono::var(2)})
      rels.push_back({{1, g, q}});
  Reducer span;
  for (const Rel& r : rels) {
    const int rd = std::get<2>(r.front()).total();
    if (rd > m) continue;
    for (const Mono& mult : monomials_of_degree(3, m - rd)) {
      std::vector<SVec::Entry> e;
      for (const auto& [c, g, mo] : r) e.emplace_back(coord(g, mo * mult), CycNum(c));
      span.insert(SVec(std::move(e)));
    }
  }
  return 2 * n - span.rank();
}

int koszul_oracle(const KoszulSector& s, int d) {
  if (d < 0) return 0;
  switch (s.shape()) {
    case 1:
      if (d % 2 == 0) return d == 0 ? 1 : 3;
      return d >= 3 ? lambda_presentation_dim((d - 3) / 2) : 0;
    case 2:
      return d >= 2 ? 1 : 0;
    default:
      return d == 3 ? 1 : 0;
  }
}

std::vector<int> koszul_oracle_hilbert(const KoszulSector& s, int cutoff) {
  std::vector<int> h(cutoff + 1);
  for (int d = 0; d <= cutoff; ++d) h[d] = koszul_oracle(s, d);
  return h;
}

std::vector<int> orbifold_koszul_hilbert(const CoverSpec& spec, int cutoff) {
  std::vector<int> total(cutoff + 1, 0);
  for (const Character& chi : enumerate_characters(spec.group())) {
    auto h = cohomology_hilbert(KoszulSector(spec, chi, spec.group().zero()), cutoff);
    for (int d = 0; d <= cutoff; ++d) total[d] += h[d];
  }
  return total;
}

Chain module_action(const KoszulSector& s, const Poly& p, const Chain& c, int degree) {
  std::map<int, Chain> by_degree;
  for (const auto& [pm, pc] : p.terms())
    for (const auto& [k, v] : c) chain_add(by_degree[degree + 2 * pm.total()], Key{k.gen, 0, k.mono * pm}, pc * v);
  Chain out;
  for (auto& [d, ch] : by_degree) {
    Chain nf = class_normal_form(s, s.restrict(ch), d);
    for (const auto& [k, v] : nf) chain_add(out, k, v);
  }
  return out;
}

}  // namespace ppm
