#include "ppm/floer.hpp"

#include <algorithm>

#include "ppm/data.hpp"
#include "ppm/error.hpp"

namespace ppm {

namespace {

// Basis order of the matrix: f_L, X, Y, Z, e_L, Xb, Yb, Zb.
constexpr int kMatrixOrder[8] = {kFL, kX, kY, kZ, kEL, kXb, kYb, kZb};

}  // namespace

int cfkos_basis_gen(int index) { return kMatrixOrder[index]; }

std::vector<std::pair<long, Mono>> parse_matrix_entry(const std::string& s) {
  std::vector<std::pair<long, Mono>> out;
  if (s == "0") return out;
  size_t i = 0;
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    out.emplace_back(sign, parse_mono(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

Convention parse_convention(const std::string& s) {
  if (s == "appendixA") return Convention::AppendixA;
  if (s == "cfkos-subst") return Convention::CfkosSubst;
  throw Error(ErrorKind::Parse, "unknown convention '" + s + "' (appendixA | cfkos-subst)");
}

std::string to_string(Convention c) { return c == Convention::AppendixA ? "appendixA" : "cfkos-subst"; }

const std::vector<std::vector<std::string>>& cfkos_matrix() {
  static const std::vector<std::vector<std::string>> m = {
      {"0", "0", "0", "0", "0", "x'-x", "y'-y", "z'-z"},
      {"0", "0", "0", "0", "x'-x", "0", "-xy", "z'x"},
      {"0", "0", "0", "0", "y'-y", "xy", "0", "-y'z'"},
      {"0", "0", "0", "0", "z'-z", "-z'x", "y'z'", "0"},
      {"0", "y'z'", "z'x", "xy", "0", "0", "0", "0"},
      {"y'z'", "0", "z'-z", "y-y'", "0", "0", "0", "0"},
      {"z'x", "z-z'", "0", "x'-x", "0", "0", "0", "0"},
      {"xy", "y'-y", "x-x'", "0", "0", "0", "0", "0"},
  };
  return m;
}

TwistedComplex cf_curve_data(const CoverSpec& spec, Convention conv) {
  TwistedComplex a = TwistedComplex::parse(data::floer_twisted_curves(), spec);
  if (conv == Convention::AppendixA) return a;
  const FinAbGroup& G = spec.group();
  TwistedComplex c(spec, true, "floer_cfkos_subst");
  for (const Generator& g : a.generators()) c.add_generator(g.name, g.degree, g.weight);
  const auto& m = cfkos_matrix();
  for (int col = 0; col < 8; ++col)
    for (int row = 0; row < 8; ++row) {
      if (m[row][col] == "0") continue;
      for (const auto& [sign, mono] : parse_matrix_entry(m[row][col])) {
        CurveDatum d;
        d.input = kMatrixOrder[col];
        d.output = kMatrixOrder[row];
        d.sign = sign;
        d.label = G.zero();
        for (int i = 0; i < 3; ++i) {
          d.mono.e[i] = static_cast<int16_t>(mono.e[i] + mono.e[i + 3]);
          d.label = G.add(d.label, G.scale(-mono.e[i + 3], spec.end(i)));
        }
        c.add_curve(d);
      }
    }
  return c;
}

std::array<bool, 3> fixed_variables(const CoverSpec& spec, const Character& chi) {
  std::array<bool, 3> f{};
  for (int i = 0; i < 3; ++i) f[i] = chi(spec.end(i)).is_one();
  return f;
}

std::vector<SpecialCocycle> special_cocycles(TwistedPtr cf, const Character& chi) {
  const CoverSpec& spec = cf->spec();
  const CycNum a = chi(spec.g_alpha()), b = chi(spec.g_beta()), c = chi(spec.g_gamma());
  const CycNum ai = a.inv(), bi = b.inv(), ci = c.inv();
  const CycNum one(1);
  auto k = [](int gen, int var = -1) { return Key{gen, 0, var < 0 ? Mono::one() : Mono::var(var)}; };
  std::vector<SpecialCocycle> out;
  auto add = [&](std::string name, Chain v, int degree, bool expected) {
    std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
    out.push_back({std::move(name), std::move(v), degree, false, expected});
  };
  add("P", {{k(kFL), one - a}, {k(kY, 1), -bi}, {k(kZ, 2), one}}, 3, true);
  add("Q", {{k(kFL), one - b}, {k(kX, 0), ai}, {k(kZ, 2), -b}}, 3, true);
  add("R", {{k(kFL), one - c}, {k(kX, 0), -(c * ai)}, {k(kY, 1), c}}, 3, true);
  add("U", {{k(kEL, 0), ai}, {k(kXb), ai - b}}, 2, a.is_one());
  add("V", {{k(kEL, 1), c}, {k(kYb), bi - c}}, 2, b.is_one());
  add("W", {{k(kEL, 2), one}, {k(kZb), ci - a}}, 2, c.is_one());
  SectorComplex sector = build_sector(cf, chi);
  for (SpecialCocycle& s : out) s.closed = sector.apply(s.value).empty();
  return out;
}

std::pair<int, unsigned> eta(int g) {
  switch (g) {
    case kEL: return {1, 0u};
    case kX: return {1, 1u};
    case kY: return {1, 2u};
    case kZ: return {1, 4u};
    case kXb: return {-1, 6u};  // eta(-Xb) = th_y th_z
    case kYb: return {1, 5u};   // eta(-Yb) = th_z th_x = -th_x th_z
    case kZb: return {-1, 3u};  // eta(-Zb) = th_x th_y
    case kFL: return {-1, 7u};  // eta(-f_L) = th_x th_y th_z
  }
  throw Error(ErrorKind::ShapeMismatch, "not a Floer generator");
}

Chain tau_map(const TwistedComplex& cf, const Character& chi, const Chain& c) {
  const auto fixed = fixed_variables(cf.spec(), chi);
  int top = -1;
  for (const auto& [k, v] : c) top = std::max(top, cf.generators()[k.gen].degree);
  Chain out;
  for (const auto& [k, v] : c) {
    if (cf.generators()[k.gen].degree != top) continue;
    bool vanishes = false;
    for (int i = 0; i < 3; ++i) vanishes |= !fixed[i] && k.mono.e[i] > 0;
    if (vanishes) continue;
    auto [sign, mask] = eta(k.gen);
    chain_add(out, Key{static_cast<int>(mask), 0, k.mono}, v * CycNum(sign));
  }
  return out;
}

std::optional<Chain> m2_partial(const Chain& u, const Chain& v) {
  auto k = [](int gen, const Mono& m = Mono::one()) { return Key{gen, 0, m}; };
  auto table = [&](int a, int b) -> std::optional<Chain> {
    if (a == kEL) return Chain{{k(b), CycNum(1)}};
    if (b == kEL) return Chain{{k(a), CycNum(1)}};
    if (a == kX && b == kY) return Chain{{k(kZb), CycNum(1)}, {k(kEL, Mono::var(2)), CycNum(1)}};
    if (a == kY && b == kX) return Chain{{k(kZb), CycNum(-1)}};
    if (a == kZ && b == kX) return Chain{{k(kYb), CycNum(1)}};
    if (a == kZ && b == kY) return Chain{{k(kXb), CycNum(-1)}};
    if ((a == kX && b == kX) || (a == kY && b == kY)) return Chain{};
    return std::nullopt;
  };
  Chain out;
  for (const auto& [ku, cu] : u)
    for (const auto& [kv, cv] : v) {
      auto t = table(ku.gen, kv.gen);
      if (!t) return std::nullopt;
      for (const auto& [kt, ct] : *t) chain_add(out, Key{kt.gen, 0, kt.mono * ku.mono * kv.mono}, ct * cu * cv);
    }
  return out;
}

ConventionReport compare_conventions(const CoverSpec& spec, const Character& chi, int cutoff) {
  auto a = std::make_shared<TwistedComplex>(cf_curve_data(spec, Convention::AppendixA));
  auto c = std::make_shared<TwistedComplex>(cf_curve_data(spec, Convention::CfkosSubst));
  SectorComplex sa = build_sector(a, chi), sc = build_sector(c, chi);
  ConventionReport r;
  r.chi = chi.str();
  for (int g = 0; g < 8; ++g) {
    Key k{g, 0, Mono::one()};
    Chain da = sa.diff(k), dc = sc.diff(k);
    std::string rel = da == dc ? "equal" : (da == chain_scaled(dc, CycNum(-1)) ? "negated" : "differ");
    r.rows.push_back({a->generators()[g].name, sa.format(da), sc.format(dc), rel});
  }
  r.hilbert_appendix_a = cohomology_hilbert(sa, cutoff);
  r.hilbert_cfkos_subst = cohomology_hilbert(sc, cutoff);
  return r;
}

}  // namespace ppm
