#include "ppm/mfcat.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "ppm/clifford.hpp"
#include "ppm/error.hpp"
#include "ppm/floer.hpp"
#include "ppm/linalg.hpp"

namespace ppm {

namespace {

// Class in Z^3 / (1,1,1) of the torus grading w(x_i) = w(x_i') = e_i,
// w(th_i) = -e_i, w(d_i) = e_i; every operator here is homogeneous for it.
using Torus = std::pair<int, int>;

Torus torus_of(const Key& k) {
  const CliffWord w{k.gen};
  int t[3];
  for (int i = 0; i < 3; ++i)
    t[i] = k.mono.e[i] + k.mono.e[i + 3] - static_cast<int>((w.imask() >> i) & 1u) +
           static_cast<int>((w.jmask() >> i) & 1u);
  return {t[0] - t[2], t[1] - t[2]};
}

Key hkey(int word, const Mono& m = Mono::one()) { return Key{word, 0, m}; }

int word_of(unsigned imask, unsigned jmask = 0) { return CliffWord::make(imask, jmask).id; }

Mono primed(int i) { return Mono::var(i + 3); }

std::string poly_text(const Chain& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : c) {
    std::string cs = v.str();
    bool neg = v.is_rational() && v.rational_value() < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string mag = neg ? cs.substr(1) : cs;
    if (!v.is_rational()) mag = "(" + mag + ")";
    const bool unit_mono = k.mono == Mono::one();
    if (unit_mono) s += mag;
    else s += (mag == "1" ? "" : mag + "*") + k.mono.str(kMaxVars);
  }
  return s;
}

// Operators of one homogeneous slice at a fixed primed degree: Clifford words
// by descending id (so pivots prefer words with contractions), then monomials.
std::vector<Key> hom_slice(int degree, int parity, const Torus& tor, int primed_degree) {
  std::vector<Key> out;
  for (int w = kNumWords - 1; w >= 0; --w) {
    const CliffWord cw{w};
    if (cw.parity() != parity) continue;
    const int rest = degree - cw.degree();
    if (rest < 0 || rest % 2) continue;
    const int md = rest / 2;
    if (primed_degree > md) continue;
    for (const Mono& u : monomials_of_degree(3, md - primed_degree))
      for (const Mono& p : monomials_of_degree(3, primed_degree)) {
        Mono m = u;
        for (int i = 0; i < 3; ++i) m.e[i + 3] = p.e[i];
        Key k{w, 0, m};
        if (torus_of(k) == tor) out.push_back(k);
      }
  }
  return out;
}

std::map<Torus, Chain> split_torus(const Chain& c) {
  std::map<Torus, Chain> out;
  for (const auto& [k, v] : c) out[torus_of(k)].emplace(k, v);
  return out;
}

class RowIndex {
 public:
  int operator()(const Key& k) {
    auto [it, inserted] = ids_.emplace(k, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<Key, int, KeyHash> ids_;
};

}  // namespace

Twist twist_of(const CoverSpec& spec, const Character& chi) {
  return {chi(spec.end(0)), chi(spec.end(1)), chi(spec.end(2))};
}

Twist identity_twist() { return {CycNum(1), CycNum(1), CycNum(1)}; }

Twist operator*(const Twist& a, const Twist& b) { return {a[0] * b[0], a[1] * b[1], a[2] * b[2]}; }

int hom_degree(const Key& k) { return CliffWord{k.gen}.degree() + 2 * k.mono.total(); }

int hom_parity(const HomChain& h) { return h.empty() ? -1 : CliffWord{h.begin()->first.gen}.parity(); }

HomChain hom_identity() { return {{hkey(0), CycNum(1)}}; }

HomChain compose(const HomChain& a, const HomChain& b) {
  HomChain r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      const CycNum c = va * vb;
      const Mono m = ka.mono * kb.mono;
      for (const auto& [w, s] : word_product(ka.gen, kb.gen)) chain_add(r, hkey(w, m), c * CycNum(s));
    }
  return r;
}

HomChain build_delta(const Twist& h) {
  HomChain d;
  const Mono y = Mono::var(1), z = Mono::var(2);
  for (int i = 0; i < 3; ++i) {
    chain_add(d, hkey(word_of(1u << i), primed(i)), CycNum(1));
    chain_add(d, hkey(word_of(1u << i), Mono::var(i)), -h[i]);
  }
  chain_add(d, hkey(word_of(0, 1u), y * z), h[1] * h[2]);
  chain_add(d, hkey(word_of(0, 2u), primed(0) * z), h[2]);
  chain_add(d, hkey(word_of(0, 4u), primed(0) * primed(1)), CycNum(1));
  return d;
}

void check_delta_square(const Twist& h) {
  if (!(h[0] * h[1] * h[2]).is_one())
    throw Error(ErrorKind::NonDiagonal, "twist does not preserve xyz");
  const HomChain d = build_delta(h);
  HomChain expect;
  chain_add(expect, hkey(0, primed(0) * primed(1) * primed(2)), CycNum(1));
  chain_add(expect, hkey(0, Mono::var(0) * Mono::var(1) * Mono::var(2)), CycNum(-1));
  if (compose(d, d) != expect)
    throw Error(ErrorKind::PotentialMismatch, "d^2 is not (x'y'z' - xyz) id");
}

HomChain hom_diff(const HomChain& phi, int parity, const Twist& s, const Twist& t) {
  HomChain r = compose(build_delta(t), phi);
  chain_axpy(r, CycNum(parity % 2 ? 1 : -1), compose(phi, build_delta(s)));
  return r;
}

HomChain chi_translate(const HomChain& phi, const Twist& chi) {
  Twist inv{chi[0].inv(), chi[1].inv(), chi[2].inv()};
  HomChain r;
  for (const auto& [k, v] : phi) {
    CycNum c = v;
    const CliffWord w{k.gen};
    for (int i = 0; i < 3; ++i) {
      for (int e = 0; e < k.mono.e[i + 3]; ++e) c *= inv[i];
      if (w.imask() & (1u << i)) c *= chi[i];
      if (w.jmask() & (1u << i)) c *= inv[i];
    }
    chain_add(r, k, c);
  }
  return r;
}

Chain kos_project(const HomChain& phi, const KoszulSector& target) {
  Chain r;
  for (const auto& [k, v] : phi) {
    const CliffWord w{k.gen};
    if (w.jmask()) continue;
    Mono m;
    for (int i = 0; i < 3; ++i) m.e[i] = static_cast<int16_t>(k.mono.e[i] + k.mono.e[i + 3]);
    chain_add(r, Key{static_cast<int>(w.imask()), 0, m}, v);
  }
  return target.restrict(r);
}

HomChain eta_lift_xy() {
  const Mono z = Mono::var(2);
  HomChain h;
  chain_add(h, hkey(word_of(3u)), CycNum(1));
  chain_add(h, hkey(word_of(1u, 1u), z), CycNum(-1));
  chain_add(h, hkey(0, z), CycNum::rational(1, 2));
  return h;
}

HomChain eta_lift_xyz() {
  const Mono y = Mono::var(1), z = Mono::var(2), xp = primed(0);
  HomChain h;
  chain_add(h, hkey(word_of(7u)), CycNum(1));
  chain_add(h, hkey(word_of(5u, 1u), z), CycNum(1));
  chain_add(h, hkey(word_of(3u, 1u), y), CycNum(-1));
  chain_add(h, hkey(word_of(3u, 2u), xp), CycNum(-1));
  chain_add(h, hkey(word_of(4u), z), CycNum::rational(1, 2));
  chain_add(h, hkey(word_of(2u), y), CycNum::rational(-1, 2));
  chain_add(h, hkey(word_of(1u, 3u), xp * z), CycNum(1));
  chain_add(h, hkey(word_of(0, 2u), xp * z), CycNum::rational(-1, 2));
  return h;
}

int koszul_degree(const Chain& c) {
  if (c.empty()) return 0;
  auto deg = [](const Key& k) { return std::popcount(static_cast<unsigned>(k.gen)) + 2 * k.mono.total(); };
  const int d = deg(c.begin()->first);
  for (const auto& [k, v] : c)
    if (deg(k) != d) throw Error(ErrorKind::ShapeMismatch, "Koszul cochain is not homogeneous");
  return d;
}

HomChain lift_cocycle_to_hom(const Chain& c, const KoszulSector& sector, const LiftOptions& opt) {
  if (!sector.apply(c).empty()) throw Error(ErrorKind::NotClosed, "Koszul cochain is not a cocycle");
  const Chain target_chain = sector.restrict(c);
  if (target_chain.size() != c.size())
    throw Error(ErrorKind::ShapeMismatch, "cochain has terms outside the sector");
  const int degree = koszul_degree(c);
  const int parity = degree & 1;
  const Twist one = identity_twist();
  const Twist h = twist_of(sector.spec(), sector.character());
  HomChain result;
  for (const auto& [tor, comp] : split_torus(c)) {
    Reducer red(true);
    RowIndex drows, krows;
    std::vector<Key> unknowns;
    // Even rows: coordinates of D(phi); odd rows: coordinates of kos(phi).
    auto target = [&]() {
      std::vector<SVec::Entry> e;
      for (const auto& [k, v] : comp) e.emplace_back(2 * krows(k) + 1, v);
      return SVec(std::move(e));
    };
    std::optional<SVec> sol;
    // Deepen the primed degree up to the cutoff, then retry once at twice it.
    const int hard_limit = 2 * opt.primed_cutoff;
    for (int p = 0; p <= hard_limit && !sol; ++p) {
      auto slice = hom_slice(degree, parity, tor, p);
      if (opt.reverse_order) std::reverse(slice.begin(), slice.end());
      for (const Key& u : slice) {
        const HomChain phi{{u, CycNum(1)}};
        std::vector<SVec::Entry> e;
        for (const auto& [k, v] : hom_diff(phi, parity, one, h)) e.emplace_back(2 * drows(k), v);
        for (const auto& [k, v] : kos_project(phi, sector)) e.emplace_back(2 * krows(k) + 1, v);
        red.insert(SVec(std::move(e)), static_cast<int>(unknowns.size()));
        unknowns.push_back(u);
      }
      sol = red.solve(target());
    }
    if (!sol)
      throw Error(ErrorKind::NoLiftAtCutoff,
                  "no closed lift up to primed degree " + std::to_string(hard_limit));
    for (const auto& [id, v] : sol->entries()) chain_add(result, unknowns[id], v);
  }
  return result;
}

std::optional<HomChain> solve_d_exact(const HomChain& target, int degree, int parity, const Twist& s,
                                      const Twist& t, int primed_cutoff) {
  HomChain result;
  for (const auto& [tor, comp] : split_torus(target)) {
    Reducer red(true);
    RowIndex rows;
    std::vector<Key> unknowns;
    for (int p = 0; p <= primed_cutoff; ++p)
      for (const Key& u : hom_slice(degree, parity, tor, p)) {
        std::vector<SVec::Entry> e;
        for (const auto& [k, v] : hom_diff({{u, CycNum(1)}}, parity, s, t)) e.emplace_back(rows(k), v);
        red.insert(SVec(std::move(e)), static_cast<int>(unknowns.size()));
        unknowns.push_back(u);
      }
    std::vector<SVec::Entry> e;
    for (const auto& [k, v] : comp) e.emplace_back(rows(k), v);
    auto sol = red.solve(SVec(std::move(e)));
    if (!sol) return std::nullopt;
    for (const auto& [id, v] : sol->entries()) chain_add(result, unknowns[id], v);
  }
  return result;
}

CupResult cup_product(const Chain& u, const KoszulSector& su, const Chain& v, const KoszulSector& sv,
                      bool check_independence) {
  const KoszulSector prod(su.spec(), su.character() * sv.character());
  const Twist hv = twist_of(sv.spec(), sv.character());
  auto run = [&](bool reverse) {
    LiftOptions opt;
    opt.reverse_order = reverse;
    const HomChain lu = lift_cocycle_to_hom(u, su, opt);
    const HomChain lv = lift_cocycle_to_hom(v, sv, opt);
    return kos_project(compose(chi_translate(lu, hv), lv), prod);
  };
  CupResult r;
  r.raw = run(false);
  r.degree = u.empty() || v.empty() ? 0 : koszul_degree(u) + koszul_degree(v);
  r.normal = class_normal_form(prod, r.raw, r.degree);
  if (check_independence) r.lift_independent = class_normal_form(prod, run(true), r.degree) == r.normal;
  return r;
}

CupResult cup_from_lifts(const HomChain& lu, const KoszulSector& su, const HomChain& lv,
                         const KoszulSector& sv, int degree) {
  const KoszulSector prod(su.spec(), su.character() * sv.character());
  CupResult r;
  r.degree = degree;
  r.raw = kos_project(compose(chi_translate(lu, twist_of(sv.spec(), sv.character())), lv), prod);
  r.normal = class_normal_form(prod, r.raw, degree);
  return r;
}

std::vector<TwistedProductRow> twisted_product_table(const CoverSpec& spec) {
  const Twist want{CycNum(-1), CycNum(-1), CycNum(1)};
  std::optional<Character> chi;
  for (const Character& c : enumerate_characters(spec.group()))
    if (twist_of(spec, c) == want) {
      chi = c;
      break;
    }
  if (!chi) throw Error(ErrorKind::ShapeMismatch, "cover has no character with twist (-1,-1,1)");
  const KoszulSector s(spec, *chi);
  const KoszulSector unt(spec, Character(spec.group(), spec.group().zero()));
  const Mono x = Mono::var(0), y = Mono::var(1), z = Mono::var(2);
  const Chain txy = koszul_word(3u), txyz = koszul_word(7u);
  std::vector<TwistedProductRow> rows(3);
  rows[0].name = "th_x th_y cup th_x th_y";
  rows[0].expected = koszul_word(0u, z * z, CycNum::rational(1, 4));
  rows[1].name = "th_x th_y th_z cup th_x th_y";
  for (const auto& [mask, m, c] : {std::tuple{4u, z * z, CycNum::rational(1, 4)},
                                   std::tuple{2u, y * z, CycNum::rational(1, 4)},
                                   std::tuple{1u, x * z, CycNum::rational(-1, 2)}})
    chain_add(rows[1].expected, Key{static_cast<int>(mask), 0, m}, c);
  rows[2].name = "th_x th_y th_z cup th_x th_y th_z";
  const std::pair<Chain, Chain> args[3] = {{txy, txy}, {txyz, txy}, {txyz, txyz}};
  const HomChain closed[3][2] = {{eta_lift_xy(), eta_lift_xy()},
                                 {eta_lift_xyz(), eta_lift_xy()},
                                 {eta_lift_xyz(), eta_lift_xyz()}};
  for (int i = 0; i < 3; ++i) {
    TwistedProductRow& r = rows[i];
    CupResult cr = cup_product(args[i].first, s, args[i].second, s);
    r.via_solver = cr.raw;
    r.via_closed_form = kos_project(compose(chi_translate(closed[i][0], want), closed[i][1]), unt);
    r.raw_match = r.via_solver == r.expected;
    r.class_match = cr.normal == class_normal_form(unt, r.expected, cr.degree);
  }
  return rows;
}

std::vector<MatrixCompareEntry> compare_delta_with_floer_matrix() {
  const HomChain d = build_delta(identity_twist());
  const auto& m = cfkos_matrix();
  // delta_entry[row][col] as polynomial chains.
  std::vector<std::vector<Chain>> de(8, std::vector<Chain>(8));
  int index_of_mask[8];
  int sign_of[8];
  for (int i = 0; i < 8; ++i) {
    auto [s, mask] = eta(cfkos_basis_gen(i));
    index_of_mask[mask] = i;
    sign_of[i] = s;
  }
  for (int col = 0; col < 8; ++col) {
    const unsigned cmask = eta(cfkos_basis_gen(col)).second;
    for (const auto& [k, v] : d) {
      auto [sign, tmask] = word_apply(k.gen, cmask);
      if (!sign) continue;
      const int row = index_of_mask[tmask];
      chain_add(de[row][col], Key{0, 0, k.mono}, v * CycNum(sign * sign_of[row] * sign_of[col]));
    }
  }
  std::vector<MatrixCompareEntry> out;
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col) {
      Chain f;
      for (const auto& [s, mono] : parse_matrix_entry(m[row][col])) chain_add(f, Key{0, 0, mono}, CycNum(s));
      if (f.empty() && de[row][col].empty()) continue;
      auto diag = [](const Chain& c) {
        Chain r;
        for (const auto& [k, v] : c) {
          Mono m;
          for (int i = 0; i < 3; ++i) m.e[i] = static_cast<int16_t>(k.mono.e[i] + k.mono.e[i + 3]);
          chain_add(r, Key{0, 0, m}, v);
        }
        return r;
      };
      const Chain neg = chain_scaled(de[row][col], CycNum(-1));
      std::string rel = f == de[row][col]               ? "equal"
                        : f == neg                      ? "negated"
                        : diag(f) == diag(de[row][col]) ? "equal at x'=x"
                        : diag(f) == diag(neg)          ? "negated at x'=x"
                                                        : "differ";
      out.push_back({row, col, poly_text(de[row][col]), poly_text(f), rel});
    }
  return out;
}

std::string dump_factorization(const HomChain& d) {
  std::vector<std::vector<Chain>> e(8, std::vector<Chain>(8));
  for (const auto& [k, v] : d)
    for (int col = 0; col < 8; ++col) {
      auto [sign, tmask] = word_apply(k.gen, ext_basis_mask(col));
      if (sign) chain_add(e[ext_basis_index(tmask)][col], Key{0, 0, k.mono}, v * CycNum(sign));
    }
  std::ostringstream os;
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col)
      if (!e[row][col].empty())
        os << "[" << ext_basis_name(row) << " <- " << ext_basis_name(col) << "] " << poly_text(e[row][col])
           << "\n";
  return os.str();
}

std::string format_hom(const HomChain& h) {
  if (h.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : h) {
    std::string cs = v.str();
    bool neg = v.is_rational() && v.rational_value() < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string mag = neg ? cs.substr(1) : cs;
    if (!v.is_rational()) mag = "(" + mag + ")";
    std::string body;
    if (k.mono != Mono::one()) body = k.mono.str(kMaxVars);
    if (k.gen != 0) body += (body.empty() ? "" : "*") + CliffWord{k.gen}.str();
    if (body.empty()) s += mag;
    else s += (mag == "1" ? "" : mag + "*") + body;
  }
  return s;
}

std::string format_koszul(const Chain& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : c) {
    std::string cs = v.str();
    bool neg = v.is_rational() && v.rational_value() < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string mag = neg ? cs.substr(1) : cs;
    if (!v.is_rational()) mag = "(" + mag + ")";
    std::string body;
    if (k.mono != Mono::one()) body = k.mono.str();
    if (k.gen != 0) body += (body.empty() ? "" : "*") + ext_basis_name(ext_basis_index(static_cast<unsigned>(k.gen)));
    if (body.empty()) s += mag;
    else s += (mag == "1" ? "" : mag + "*") + body;
  }
  return s;
}

}  // namespace ppm
