#include "ppm/amodel.hpp"

#include <algorithm>

#include "ppm/data.hpp"
#include "ppm/error.hpp"

namespace ppm {

namespace {

const char kEnd[3] = {'a', 'b', 'g'};

}  // namespace

LogGenerator LogGenerator::parse(const std::string& name) {
  if (name == "e") return e();
  if (name == "f1") return f1();
  if (name == "f2") return f2();
  if (name.size() >= 3 && (name[0] == 'e' || name[0] == 'f')) {
    int end = -1;
    for (int a = 0; a < 3; ++a)
      if (name[1] == kEnd[a]) end = a;
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(name.substr(2), &used);
      if (used != name.size() - 2) n = 0;
    } catch (const std::logic_error&) {
      n = 0;
    }
    if (end >= 0 && n >= 1) return name[0] == 'e' ? e_tower(end, n) : f_tower(end, n);
  }
  throw Error(ErrorKind::Parse, "unknown log generator '" + name + "'");
}

int LogGenerator::degree() const {
  switch (kind) {
    case Kind::E: return 0;
    case Kind::F1:
    case Kind::F2: return 3;
    case Kind::ETower: return 2 * n;
    case Kind::FTower: return 3 + 2 * n;
  }
  return 0;
}

Elem LogGenerator::weight(const CoverSpec& spec) const {
  if (kind == Kind::ETower || kind == Kind::FTower) return spec.group().scale(n, spec.end(end));
  return spec.group().zero();
}

std::string LogGenerator::name() const {
  switch (kind) {
    case Kind::E: return "e";
    case Kind::F1: return "f1";
    case Kind::F2: return "f2";
    case Kind::ETower: return std::string("e") + kEnd[end] + std::to_string(n);
    case Kind::FTower: return std::string("f") + kEnd[end] + std::to_string(n);
  }
  return "";
}

std::string LogGenerator::pretty() const {
  if (kind != Kind::ETower && kind != Kind::FTower) return name();
  std::string s = std::string(kind == Kind::ETower ? "e_" : "f_") + kEnd[end] + " t_" + kEnd[end];
  if (n > 1) s += "^" + std::to_string(n);
  return s;
}

TwistedComplex sc_curve_data(const CoverSpec& spec, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::CutoffTooSmall, "winding cutoff must be at least 1");
  return TwistedComplex::parse(data::sc_log_curves(), spec, n_max);
}

std::vector<LogGenerator> log_generators(int cutoff) {
  std::vector<LogGenerator> out{LogGenerator::e(), LogGenerator::f1(), LogGenerator::f2()};
  for (int n = 1; 2 * n <= cutoff; ++n)
    for (int a = 0; a < 3; ++a) {
      out.push_back(LogGenerator::e_tower(a, n));
      if (3 + 2 * n <= cutoff) out.push_back(LogGenerator::f_tower(a, n));
    }
  std::erase_if(out, [&](const LogGenerator& g) { return g.degree() > cutoff; });
  return out;
}

LogComb star_product(const LogGenerator& u, const LogGenerator& v) {
  using K = LogGenerator::Kind;
  LogComb out;
  if (u.kind == K::E) return {{v, CycNum(1)}};
  if (v.kind == K::E) return {{u, CycNum(1)}};
  const bool uf = u.kind != K::ETower;  // f1, f2, f-towers carry an f
  const bool vf = v.kind != K::ETower;
  if (uf && vf) return out;  // f * f = 0
  if (!uf && !vf) {
    if (u.end != v.end) return out;
    return {{LogGenerator::e_tower(u.end, u.n + v.n), CycNum(1)}};
  }
  const LogGenerator& f = uf ? u : v;
  const LogGenerator& t = uf ? v : u;
  if (f.kind == K::FTower) {
    if (f.end != t.end) return out;
    return {{LogGenerator::f_tower(f.end, f.n + t.n), CycNum(1)}};
  }
  // f1 * e_a = f_a (a = alpha, beta), f2 * e_beta = -f_beta, f2 * e_gamma = f_gamma.
  if (f.kind == K::F1) {
    if (t.end == 2) return out;
    return {{LogGenerator::f_tower(t.end, t.n), CycNum(1)}};
  }
  if (t.end == 0) return out;
  return {{LogGenerator::f_tower(t.end, t.n), CycNum(t.end == 1 ? -1 : 1)}};
}

LogComb star_product(const LogGenerator& u, const Character& cu, const LogGenerator& v,
                     const Character& cv) {
  if (!cu.is_trivial() || !cv.is_trivial())
    throw Error(ErrorKind::TwistedProductUnsupported,
                "star product is tabulated for the untwisted sector only");
  return star_product(u, v);
}

int default_winding(int cutoff) { return std::max(1, cutoff / 2); }

std::vector<int> sh_hilbert(const CoverSpec& spec, const Character& chi, int cutoff, bool invariant,
                            int n_max) {
  if (n_max < 0) n_max = default_winding(cutoff);
  auto sc = std::make_shared<TwistedComplex>(sc_curve_data(spec, n_max));
  if (invariant) return cohomology_hilbert(invariant_subcomplex(sc, chi), cutoff);
  return cohomology_hilbert(build_sector(sc, chi), cutoff);
}

std::vector<int> sh_hilbert_total(const CoverSpec& spec, int cutoff, int n_max) {
  if (n_max < 0) n_max = default_winding(cutoff);
  auto sc = std::make_shared<TwistedComplex>(sc_curve_data(spec, n_max));
  std::vector<int> total(cutoff + 1, 0);
  for (const Character& chi : enumerate_characters(spec.group())) {
    auto h = cohomology_hilbert(invariant_subcomplex(sc, chi), cutoff);
    for (int d = 0; d <= cutoff; ++d) total[d] += h[d];
  }
  return total;
}

bool sh_truncation_stable(const CoverSpec& spec, const Character& chi, int cutoff) {
  const int n = default_winding(cutoff);
  return sh_hilbert(spec, chi, cutoff, false, n) == sh_hilbert(spec, chi, cutoff, false, 2 * n) &&
         sh_hilbert(spec, chi, cutoff, true, n) == sh_hilbert(spec, chi, cutoff, true, 2 * n);
}

Chain log_chain(const TwistedComplex& sc, const LogComb& c) {
  Chain out;
  for (const auto& [g, v] : c) {
    int id = sc.gen_index(g.name());
    if (id < 0) throw Error(ErrorKind::ShapeMismatch, g.name() + " is beyond the winding cutoff");
    chain_add(out, Key{id, 0, Mono::one()}, v);
  }
  return out;
}

LogComb log_comb(const TwistedComplex& sc, const Chain& c) {
  LogComb out;
  for (const auto& [k, v] : c) out[LogGenerator::parse(sc.generators()[k.gen].name)] += v;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string format_comb(const LogComb& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [g, v] : c) {
    if (!s.empty()) s += " + ";
    if (!v.is_one()) s += "(" + v.str() + ")*";
    s += g.pretty();
  }
  return s;
}

}  // namespace ppm
