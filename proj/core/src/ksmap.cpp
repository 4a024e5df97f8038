#include "ppm/ksmap.hpp"

#include <numeric>
#include <set>
#include <tuple>

#include "ppm/error.hpp"
#include "ppm/mfcat.hpp"

namespace ppm {

namespace {

const char* kTowerE[3] = {"ea", "eb", "eg"};
const char* kTowerF[3] = {"fa", "fb", "fg"};
constexpr int kXYZ[3] = {kX, kY, kZ};

CycNum power(const CycNum& c, int n) {
  CycNum r(1);
  for (int i = 0; i < n; ++i) r *= c;
  return r;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

KSSeed seed_ks(TwistedPtr sc, TwistedPtr cf, const Character& chi, int cutoff) {
  KSSeed s{sc, cf, chi, {}, {}};
  const CoverSpec& spec = sc->spec();
  for (int g = 0; g < static_cast<int>(sc->generators().size()); ++g) s.generators.push_back({g, 0, Mono::one()});
  const bool trivial = chi.is_trivial();
  const CycNum ca = chi(spec.g_alpha()), cb = chi(spec.g_beta()), cc = chi(spec.g_gamma());
  const CycNum one(1);
  auto pin = [&](const std::string& scg, int cfg, const Mono& m, const CycNum& v) {
    int g = sc->gen_index(scg);
    if (g < 0) return;
    s.pins.push_back({{g, 0, Mono::one()}, {cfg, 0, m}, v});
  };
  // Pins every coefficient of the slice of ks(scg): listed keys get their value, the rest 0.
  auto pin_all = [&](const std::string& scg, const std::vector<std::tuple<int, Mono, CycNum>>& vals) {
    int g = sc->gen_index(scg);
    if (g < 0) return;
    const Generator& gen = sc->generators()[g];
    for (const Key& k : cf->slice_basis(gen.degree, gen.weight)) {
      CycNum v;
      for (const auto& [cg, m, c] : vals)
        if (k.gen == cg && k.mono == m) v = c;
      pin(scg, k.gen, k.mono, v);
    }
  };
  const Mono x = Mono::var(0), y = Mono::var(1), z = Mono::var(2);
  if (trivial) {
    pin_all("e", {{kEL, Mono::one(), one}});
    pin_all("f1", {{kX, x, CycNum(-1)}, {kY, y, one}});
    pin_all("f2", {{kY, y, CycNum(-1)}, {kZ, z, one}});
  } else {
    pin("e", kEL, Mono::one(), ca.inv());
    pin("f1", kFL, Mono::one(), one - cc);
    pin("f2", kFL, Mono::one(), -(one - ca));
  }
  const CycNum kappa[3] = {ca.inv(), cc, one};
  const CycNum fixed_fl[3] = {one - cc, one - cc, -(one - ca)};
  const long lead[3] = {-1, 1, 1};
  const CycNum end_value[3] = {ca, cb, cc};
  for (int a = 0; a < 3; ++a)
    for (int n = 1; n <= default_winding(cutoff) + 2; ++n) {
      const std::string e = kTowerE[a] + std::to_string(n), f = kTowerF[a] + std::to_string(n);
      const Mono xn = Mono::var(a, n);
      if (trivial && n == 1) pin_all(e, {{kEL, xn, one}});
      else pin(e, kEL, xn, power(kappa[a], n));
      if (trivial) pin(f, kXYZ[a], Mono::var(a, n + 1), CycNum(lead[a]));
      else if (end_value[a].is_one()) pin(f, kFL, xn, fixed_fl[a]);
    }
  return s;
}

Chain KSMap::apply(const Chain& sc_chain) const {
  Chain r;
  for (const auto& [k, v] : sc_chain) {
    auto it = images.find(Key{k.gen, 0, Mono::one()});
    if (it == images.end()) throw Error(ErrorKind::ShapeMismatch, "ks is not defined on " + sc->key_label(k));
    Chain img;
    for (const auto& [ik, iv] : it->second) chain_add(img, Key{ik.gen, 0, ik.mono * k.mono}, iv);
    chain_axpy(r, v, img);
  }
  return r;
}

Chain KSMap::image(const std::string& sc_gen) const {
  int g = sc->gen_index(sc_gen);
  auto it = images.find(Key{g, 0, Mono::one()});
  if (g < 0 || it == images.end()) throw Error(ErrorKind::ShapeMismatch, "ks is not defined on " + sc_gen);
  return it->second;
}

KSMap solve_unknowns(const KSSeed& seed) {
  const TwistedComplex& sc = *seed.sc;
  const TwistedComplex& cf = *seed.cf;
  SectorComplex sc_sector(seed.sc, seed.chi), cf_sector(seed.cf, seed.chi);
  KSMap m{seed.sc, seed.cf, seed.chi, {}, 0};

  const int ng = static_cast<int>(sc.generators().size());
  std::vector<bool> in_map(ng, false);
  for (const Key& k : seed.generators) in_map[k.gen] = true;
  std::vector<int> parent(ng);
  std::iota(parent.begin(), parent.end(), 0);
  for (const CurveDatum& c : sc.curves())
    if (in_map[c.input] && in_map[c.output]) parent[find_root(parent, c.input)] = find_root(parent, c.output);
  std::map<int, std::vector<int>> blocks;
  for (const Key& k : seed.generators) blocks[find_root(parent, k.gen)].push_back(k.gen);

  // Incoming SC differential: sources[g] = (g', coefficient of g in d g').
  std::vector<std::vector<std::pair<int, CycNum>>> sources(ng);
  for (const Key& k : seed.generators)
    for (const auto& [ok, ov] : sc_sector.diff(k))
      if (in_map[ok.gen]) sources[ok.gen].emplace_back(k.gen, ov);

  for (const auto& [root, gens] : blocks) {
    std::map<std::tuple<int, int, Key>, int> rows;  // (kind, sc gen, cf key); kind 0 = chain map, 1 = pin
    auto row = [&](int kind, int g, const Key& k) {
      return rows.emplace(std::make_tuple(kind, g, k), static_cast<int>(rows.size())).first->second;
    };
    std::map<std::pair<int, Key>, CycNum> pinned;
    for (const KSPin& p : seed.pins)
      if (find_root(parent, p.sc.gen) == root) pinned[{p.sc.gen, p.cf}] = p.value;

    Reducer red(true);
    std::vector<std::pair<int, Key>> unknowns;
    std::set<std::pair<int, Key>> known_slots;
    for (int g : gens) {
      const Generator& gen = sc.generators()[g];
      for (const Key& k : cf.slice_basis(gen.degree, gen.weight)) {
        std::vector<SVec::Entry> e;
        // ks(d g') - d ks(g') = 0 for every g'; ks(g) enters through g' -> g.
        for (const auto& [src, c] : sources[g]) e.emplace_back(row(0, src, k), c);
        for (const auto& [dk, dv] : cf_sector.diff(k)) e.emplace_back(row(0, g, dk), -dv);
        if (pinned.count({g, k})) e.emplace_back(row(1, g, k), CycNum(1));
        red.insert(SVec(std::move(e)), static_cast<int>(unknowns.size()));
        unknowns.emplace_back(g, k);
        known_slots.insert({g, k});
      }
    }
    std::vector<SVec::Entry> target;
    for (const auto& [slot, v] : pinned) {
      if (!known_slots.count(slot))
        throw Error(ErrorKind::Inconsistent, "pin outside the degree/weight slice of ks(" +
                                                 sc.generators()[slot.first].name + ")");
      target.emplace_back(row(1, slot.first, slot.second), v);
    }
    auto sol = red.solve(SVec(std::move(target)));
    if (!sol) {
      std::string names;
      for (int g : gens) names += (names.empty() ? "" : ", ") + sc.generators()[g].name;
      throw Error(ErrorKind::Inconsistent, "no chain map with the pinned entries on {" + names + "} for " +
                                               seed.chi.str());
    }
    m.free_parameters += static_cast<int>(red.kernel().size());
    for (int g : gens) m.images[Key{g, 0, Mono::one()}];
    for (const auto& [id, v] : sol->entries()) chain_add(m.images[Key{unknowns[id].first, 0, Mono::one()}], unknowns[id].second, v);
  }
  return m;
}

KSMap solve_ks(const CoverSpec& spec, const Character& chi, int cutoff, Convention conv) {
  auto sc = std::make_shared<TwistedComplex>(sc_curve_data(spec, default_winding(cutoff) + 2));
  auto cf = std::make_shared<TwistedComplex>(cf_curve_data(spec, conv));
  return solve_unknowns(seed_ks(sc, cf, chi, cutoff));
}

namespace {

struct CohomologyCompare {
  int sc_dim = 0, cf_dim = 0, rank = 0;
};

CohomologyCompare compare_slice(const KSMap& m, const ChainView& scv, const ChainView& cfv, int d) {
  CohomologyCompare r;
  auto reps = cohomology_basis(scv, d);
  SliceCohomology cfc = slice_cohomology(cfv, d);
  r.sc_dim = static_cast<int>(reps.size());
  r.cf_dim = cfc.dim();
  Reducer red = cfc.boundaries;
  for (const Chain& rep : reps)
    if (red.insert(to_svec(m.apply(rep), cfc.slice))) ++r.rank;
  return r;
}

}  // namespace

KSReport verify_chain_map_quasi_iso(const KSMap& m, int cutoff) {
  KSReport rep;
  rep.chi = m.chi.str();
  const FinAbGroup& G = m.sc->spec().group();
  SectorComplex scs(m.sc, m.chi), cfs(m.cf, m.chi);
  SectorComplex sci(m.sc, m.chi, G.zero()), cfi(m.cf, m.chi, G.zero());
  auto fail = [&](const std::string& what) {
    if (rep.ok) rep.first_failure = what;
    rep.ok = false;
  };
  for (const auto& [k, img] : m.images) {
    const Elem w = m.sc->key_weight(k);
    for (const auto& [ik, iv] : img)
      if (m.cf->key_weight(ik) != w || m.cf->key_degree(ik) != m.sc->key_degree(k)) rep.weight_homogeneous = false;
  }
  if (!rep.weight_homogeneous) fail("ks is not degree/weight homogeneous");
  if (m.chi.is_trivial()) {
    rep.unit_preserved = m.image("e") == Chain{{Key{kEL, 0, Mono::one()}, CycNum(1)}};
    if (!rep.unit_preserved) fail("ks(e) != e_L");
  }
  for (int d = 0; d <= cutoff; ++d) {
    KSDegree kd;
    kd.degree = d;
    for (const Key& a : scs.basis(d))
      if (m.apply(scs.diff(a)) != cfs.apply(m.apply({{a, CycNum(1)}}))) kd.chain_map = false;
    auto full = compare_slice(m, scs, cfs, d);
    auto inv = compare_slice(m, sci, cfi, d);
    kd.sc_dim = full.sc_dim;
    kd.cf_dim = full.cf_dim;
    kd.rank = full.rank;
    kd.sc_inv = inv.sc_dim;
    kd.cf_inv = inv.cf_dim;
    kd.rank_inv = inv.rank;
    const std::string at = " at degree " + std::to_string(d) + " for " + rep.chi;
    if (!kd.chain_map) fail("ks d != d ks" + at);
    if (!kd.iso()) fail("ks is not a cohomology isomorphism" + at);
    if (!kd.iso_inv()) fail("invariant part of ks is not an isomorphism" + at);
    rep.degrees.push_back(kd);
  }
  return rep;
}

KSConstants ks_constants(int n) {
  const FinAbGroup G = FinAbGroup::from_cyclic({n});
  const CoverSpec spec(G, G.normalize({1}), G.normalize({n - 1}));
  const Character chi = enumerate_characters(G).at(1);
  const KSMap m = solve_ks(spec, chi, 6);
  const Chain img = m.image("f1");
  auto coef = [&](int gen, const Mono& mo) {
    auto it = img.find(Key{gen, 0, mo});
    return it == img.end() ? CycNum() : it->second;
  };
  KSConstants k;
  k.cx = coef(kX, Mono::var(0)) / chi(spec.g_alpha()).inv();
  k.cy = coef(kY, Mono::var(1));
  k.cz = coef(kZ, Mono::var(2));
  k.cf = coef(kFL, Mono::one());
  return k;
}

Chain tau_ks(const KSMap& m, const LogGenerator& g) { return tau_map(*m.cf, m.chi, m.image(g.name())); }

RingMatchReport ring_match(int cutoff) {
  const CoverSpec spec = CoverSpec::trivial();
  const Character one = enumerate_characters(spec.group()).front();
  const KSMap m = solve_ks(spec, one, cutoff);
  const KoszulSector kos(spec, one);
  const auto gens = log_generators(cutoff);
  std::map<LogGenerator, Chain> tk;
  std::map<LogGenerator, HomChain> lifts;
  for (const LogGenerator& g : gens) {
    tk[g] = tau_ks(m, g);
    lifts[g] = lift_cocycle_to_hom(tk[g], kos);
  }
  RingMatchReport rep;
  auto sign_against = [&](const Chain& c, const Chain& lambda, int d) {
    const Chain nc = class_normal_form(kos, c, d), nl = class_normal_form(kos, lambda, d);
    if (nc == nl) return 1;
    if (nc == chain_scaled(nl, CycNum(-1))) return -1;
    return 0;
  };
  rep.sign_f1 = sign_against(tk[LogGenerator::f1()], lambda_class(2), 3);
  rep.sign_f2 = sign_against(tk[LogGenerator::f2()], lambda_class(0), 3);
  if (rep.sign_f1 == 0 || rep.sign_f2 == 0) rep.ok = false;
  auto as_poly = [](const Chain& c) -> std::optional<Poly> {
    Poly p(3);
    for (const auto& [k, v] : c) {
      if (k.gen != 0) return std::nullopt;
      p.add_term(k.mono, v);
    }
    return p;
  };
  for (const LogGenerator& u : gens)
    for (const LogGenerator& v : gens) {
      const int d = u.degree() + v.degree();
      if (d > cutoff) continue;
      RingMatchRow row;
      row.u = u.pretty();
      row.v = v.pretty();
      const LogComb star = star_product(u, v);
      row.star = format_comb(star);
      Chain lhs;
      for (const auto& [g, c] : star) chain_axpy(lhs, c, tk.at(g));
      const Chain lhs_nf = class_normal_form(kos, lhs, d);
      const CupResult cup = cup_from_lifts(lifts[u], kos, lifts[v], kos, d);
      row.lhs = format_koszul(lhs_nf);
      row.rhs = format_koszul(cup.normal);
      row.match = lhs_nf == cup.normal;
      if (auto p = as_poly(tk[u])) row.module_match = module_action(kos, *p, tk[v], v.degree()) == cup.normal;
      else if (auto q = as_poly(tk[v])) row.module_match = module_action(kos, *q, tk[u], u.degree()) == cup.normal;
      if (!row.match || !row.module_match) rep.ok = false;
      rep.rows.push_back(std::move(row));
    }
  return rep;
}

ModuleComparison compare_invariant_parts(const CoverSpec& spec, int cutoff) {
  ModuleComparison r;
  auto sc = std::make_shared<TwistedComplex>(sc_curve_data(spec, default_winding(cutoff)));
  auto cf = std::make_shared<TwistedComplex>(cf_curve_data(spec));
  r.sh = sh_hilbert_total(spec, cutoff);
  r.cf.assign(cutoff + 1, 0);
  for (const Character& chi : enumerate_characters(spec.group())) {
    auto h = cohomology_hilbert(invariant_subcomplex(cf, chi), cutoff);
    for (int d = 0; d <= cutoff; ++d) r.cf[d] += h[d];
  }
  r.upstairs = cohomology_hilbert(UpstairsComplex(sc), cutoff);
  r.kos = orbifold_koszul_hilbert(spec, cutoff);
  r.ok = r.sh == r.cf && r.sh == r.upstairs && r.sh == r.kos;
  return r;
}

}  // namespace ppm
