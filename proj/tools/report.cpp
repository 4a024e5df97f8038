#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "ppm/amodel.hpp"
#include "ppm/clifford.hpp"
#include "ppm/error.hpp"
#include "ppm/koszul.hpp"
#include "ppm/ksmap.hpp"
#include "ppm/mfcat.hpp"
#include "ppm/twisted.hpp"

namespace ppm::cli {

namespace {

class Checks {
 public:
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    list_.push_back(std::move(c));
    if (!pass && first_.empty()) first_ = detail.empty() ? name : name + ": " + detail;
  }
  // Runs f and records a failure if it throws.
  template <class F>
  void guard(const std::string& name, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      add(name, false, e.what());
    }
  }
  bool ok() const { return first_.empty(); }
  const std::string& first() const { return first_; }
  Json json() const {
    Json v;
    v["pass"] = ok();
    v["checks"] = list_;
    if (!ok()) v["first_failure"] = first_;
    return v;
  }

 private:
  Json list_ = Json::array();
  std::string first_;
};

std::string join(const std::vector<int>& h) {
  std::string s;
  for (int v : h) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string chi_label(const CoverSpec& spec, const Character& chi) {
  return chi.str() + " [" + chi(spec.g_alpha()).str() + ", " + chi(spec.g_beta()).str() + ", " +
         chi(spec.g_gamma()).str() + "]";
}

// "ZmxZn" with g_alpha = (1,0), g_beta = (0,1): closed genus/puncture formula.
std::optional<std::pair<long, long>> standard_formula(const RunConfig& c) {
  long m = 0, n = 0;
  char tail = 0;
  if (std::sscanf(c.group.c_str(), "Z%ldxZ%ld%c", &m, &n, &tail) != 2) return std::nullopt;
  if (c.ga != "1,0" || c.gb != "0,1") return std::nullopt;
  const long g = std::gcd(m, n);
  return std::pair{((m - 1) * (n - 1) - g + 1) / 2, m + n + g};
}

Json cover_json(const RunConfig& cfg, const CoverSpec& spec, Checks& checks) {
  const CoverInvariants inv = cover_invariants(spec);
  const FinAbGroup& G = spec.group();
  Json c;
  c["group"] = G.str();
  c["order"] = G.order();
  c["g_alpha"] = G.str(spec.g_alpha());
  c["g_beta"] = G.str(spec.g_beta());
  c["g_gamma"] = G.str(spec.g_gamma());
  c["genus"] = inv.genus;
  c["punctures"] = inv.punctures;
  c["punctures_per_end"] = {inv.per_end[0], inv.per_end[1], inv.per_end[2]};
  c["euler_characteristic"] = -G.order();
  checks.add("euler characteristic", 2 - 2 * inv.genus - inv.punctures == -G.order());
  if (auto f = standard_formula(cfg)) {
    c["closed_formula"] = {{"genus", f->first}, {"punctures", f->second}};
    checks.add("closed genus/puncture formula", f->first == inv.genus && f->second == inv.punctures);
  }
  return c;
}

struct Context {
  RunConfig cfg;
  CoverSpec spec;
  int winding;
  TwistedPtr sc, cf;
  std::vector<Character> chars;
};

Json hilbert_sector(const Context& ctx, const Character& chi, Checks& checks) {
  const int cut = ctx.cfg.cutoff;
  const Elem zero = ctx.spec.group().zero();
  Json s;
  s["chi"] = chi.str();
  s["chi_values"] = {chi(ctx.spec.g_alpha()).str(), chi(ctx.spec.g_beta()).str(), chi(ctx.spec.g_gamma()).str()};
  const KoszulSector kos(ctx.spec, chi);
  s["koszul_shape"] = kos.shape();
  s["koszul_differential"] = kos.differential_text();
  const auto sh = sh_hilbert(ctx.spec, chi, cut, false, ctx.winding);
  const auto cf = cohomology_hilbert(build_sector(ctx.cf, chi), cut);
  const auto kh = cohomology_hilbert(kos, cut);
  s["sc_hilbert"] = sh;
  s["cf_hilbert"] = cf;
  s["kos_hilbert"] = kh;
  const auto shi = sh_hilbert(ctx.spec, chi, cut, true, ctx.winding);
  const auto cfi = cohomology_hilbert(invariant_subcomplex(ctx.cf, chi), cut);
  const auto khi = cohomology_hilbert(KoszulSector(ctx.spec, chi, zero), cut);
  s["invariant"] = {{"sc_hilbert", shi}, {"cf_hilbert", cfi}, {"kos_hilbert", khi}};
  const std::string who = chi_label(ctx.spec, chi);
  checks.add("sector hilbert sc = cf = kos " + chi.str(), sh == cf && cf == kh,
             sh == cf && cf == kh ? "" : who + " sc " + join(sh) + " cf " + join(cf) + " kos " + join(kh));
  checks.add("invariant hilbert sc = cf = kos " + chi.str(), shi == cfi && cfi == khi,
             shi == cfi && cfi == khi ? "" : who + " sc " + join(shi) + " cf " + join(cfi) + " kos " + join(khi));
  const auto oracle = koszul_oracle_hilbert(kos, cut);
  checks.add("koszul closed form " + chi.str(), oracle == kh, oracle == kh ? "" : who + " oracle " + join(oracle));
  s["ks_status"] = "not run";
  return s;
}

Json ks_sector(const Context& ctx, const Character& chi, Checks& checks) {
  Json k;
  const std::string name = "ks quasi-isomorphism " + chi.str();
  try {
    const KSMap m = solve_ks(ctx.spec, chi, ctx.cfg.cutoff, ctx.cfg.convention);
    const KSReport r = verify_chain_map_quasi_iso(m, ctx.cfg.cutoff);
    k["status"] = r.ok ? "quasi-isomorphism" : "failed";
    k["free_parameters"] = m.free_parameters;
    k["ks_f1"] = SectorComplex(m.cf, chi).format(m.image("f1"));
    k["ks_f2"] = SectorComplex(m.cf, chi).format(m.image("f2"));
    Json ranks = Json::array();
    for (const KSDegree& d : r.degrees) ranks.push_back({d.degree, d.rank, d.sc_dim, d.cf_dim});
    k["ranks"] = ranks;  // [degree, rank, dim sc, dim cf]
    checks.add(name, r.ok, r.first_failure);
  } catch (const Error& e) {
    k["status"] = "failed";
    checks.add(name, false, e.what());
  }
  return k;
}

Json mf_json(const Context& ctx, Checks& checks) {
  Json mf;
  Json deltas = Json::array();
  for (const Character& chi : ctx.chars) {
    const Twist h = twist_of(ctx.spec, chi);
    bool ok = true;
    std::string err;
    try {
      check_delta_square(h);
    } catch (const Error& e) {
      ok = false;
      err = e.what();
    }
    deltas.push_back({{"chi", chi.str()}, {"delta_squared_is_potential", ok}});
    checks.add("delta^2 = (x'y'z' - xyz) id " + chi.str(), ok, err);
  }
  mf["delta"] = deltas;

  // D^2 = 0 on hom(Delta^s, Delta^t) for s = 1 and t = chi, spot-checked on words times linear monomials.
  bool dsq = true;
  std::string dsq_fail;
  const Twist one = identity_twist();
  for (const Character& chi : ctx.chars) {
    const Twist t = twist_of(ctx.spec, chi);
    for (int w = 0; w < kNumWords && dsq; ++w)
      for (int v = -1; v < 6 && dsq; ++v) {
        const Mono m = v < 0 ? Mono::one() : Mono::var(v);
        const HomChain phi{{Key{w, 0, m}, CycNum(1)}};
        const int p = CliffWord{w}.parity();
        if (!chain_is_zero(hom_diff(hom_diff(phi, p, one, t), 1 - p, one, t))) {
          dsq = false;
          dsq_fail = "D^2 != 0 on " + CliffWord{w}.str() + " for " + chi.str();
        }
      }
  }
  mf["hom_d_squared_zero"] = dsq;
  checks.add("D^2 = 0 on hom complexes", dsq, dsq_fail);

  const std::string err_ab = [&] {
    try {
      const auto rows = twisted_product_table(ctx.spec);
      Json tab = Json::array();
      const Twist want{CycNum(-1), CycNum(-1), CycNum(1)};
      const HomChain lifts[2] = {eta_lift_xy(), eta_lift_xyz()};
      bool closed = true;
      for (int i = 0; i < 2; ++i)
        closed = closed && chain_is_zero(hom_diff(lifts[i], i, one, want));
      checks.add("closed-form lifts are D-closed", closed);
      mf["eta_lifts_closed"] = closed;
      for (size_t i = 0; i < rows.size(); ++i) {
        const TwistedProductRow& r = rows[i];
        tab.push_back({{"product", r.name},
                       {"expected", format_koszul(r.expected)},
                       {"solver", format_koszul(r.via_solver)},
                       {"closed_form", format_koszul(r.via_closed_form)},
                       {"raw_match", r.raw_match},
                       {"class_match", r.class_match}});
        // The last entry is printed as 0 but the raw composite is only exact.
        const bool pass = i + 1 < rows.size() ? r.raw_match : r.class_match;
        checks.add("product table: " + r.name, pass, pass ? "" : "got " + format_koszul(r.via_solver));
      }
      mf["products"] = tab;
      return std::string();
    } catch (const Error& e) {
      return std::string(e.what());
    }
  }();
  if (!err_ab.empty()) mf["products"] = err_ab;

  int equal = 0, at_diag = 0, differ = 0;
  for (const MatrixCompareEntry& e : compare_delta_with_floer_matrix()) {
    if (e.relation == "equal" || e.relation == "negated") ++equal;
    else if (e.relation == "differ") ++differ;
    else ++at_diag;
  }
  mf["floer_matrix_comparison"] = {{"equal_up_to_sign", equal}, {"equal_at_primed_eq_unprimed", at_diag}, {"differ", differ}};
  return mf;
}

void verify_extras(const Context& ctx, Json& report, Checks& checks) {
  const int cut = ctx.cfg.cutoff;
  Json extra;
  for (const Character& chi : ctx.chars) {
    checks.guard("special cocycles " + chi.str(), [&] {
      for (const SpecialCocycle& c : special_cocycles(ctx.cf, chi))
        checks.add("cocycle " + c.name + " " + chi.str(), c.closed == c.expected_closed,
                   c.closed == c.expected_closed ? "" : c.closed ? "closed but expected not" : "not closed");
    });
  }
  for (const auto& [name, c] : {std::pair{"sc", ctx.sc}, std::pair{"cf", ctx.cf}}) {
    checks.guard(std::string("psi intertwines ") + name, [&, c = c, name = name] {
      lift_cover_and_psi(c).psi->verify(cut);
      checks.add(std::string("psi intertwines ") + name, true);
    });
    checks.guard(std::string("sector sum ") + name, [&, c = c, name = name] {
      const SectorSum s = sector_sum_rule(c, cut);
      extra[std::string("upstairs_") + name] = s.upstairs;
      checks.add(std::string("sector sum = upstairs ") + name, s.upstairs == s.sector_sum,
                 s.upstairs == s.sector_sum ? "" : join(s.upstairs) + " vs " + join(s.sector_sum));
    });
  }
  checks.guard("invariant parts", [&] {
    const ModuleComparison mc = compare_invariant_parts(ctx.spec, cut);
    extra["sh_total"] = mc.sh;
    extra["orbifold_koszul"] = mc.kos;
    checks.add("SH = Kos(W, G^) as graded modules", mc.ok,
               mc.ok ? "" : "sh " + join(mc.sh) + " cf " + join(mc.cf) + " up " + join(mc.upstairs) + " kos " + join(mc.kos));
  });
  const Character& spot = ctx.chars.back();
  checks.guard("truncation stability", [&] {
    checks.add("truncation stable under cutoff doubling " + spot.str(), sh_truncation_stable(ctx.spec, spot, std::min(cut, 12)));
  });
  checks.guard("ring match", [&] {
    const RingMatchReport r = ring_match(std::min(cut, 12));
    extra["ring_match"] = {{"pairs", r.rows.size()}, {"sign_f1", r.sign_f1}, {"sign_f2", r.sign_f2}};
    std::string bad;
    for (const RingMatchRow& row : r.rows)
      if (bad.empty() && (!row.match || !row.module_match)) bad = row.u + " * " + row.v;
    checks.add("untwisted ring match", r.ok, bad);
  });
  report["verify"] = extra;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult res;
  static const char* kCommands[] = {"cover-info", "sectors", "ks", "mf", "verify"};
  if (std::find(std::begin(kCommands), std::end(kCommands), cfg.command) == std::end(kCommands)) {
    res.exit_code = 2;
    res.first_failure = "unknown command " + cfg.command;
    return res;
  }
  if (cfg.cutoff < 3 || cfg.winding == 0 || cfg.winding < -1) {
    res.exit_code = 2;
    res.first_failure = "need cutoff >= 3 and winding >= 1";
    return res;
  }
  std::optional<CoverSpec> spec;
  try {
    spec = CoverSpec::parse(cfg.group, cfg.ga, cfg.gb);
  } catch (const Error& e) {
    res.exit_code = 2;
    res.first_failure = e.what();
    return res;
  }
  Checks checks;
  Json& rep = res.report;
  rep["command"] = cfg.command;
  rep["config"] = {{"cutoff", cfg.cutoff},
                   {"winding", cfg.winding < 0 ? default_winding(cfg.cutoff) : cfg.winding},
                   {"convention", to_string(cfg.convention)}};
  rep["cover"] = cover_json(cfg, *spec, checks);
  if (cfg.command != "cover-info") {
    Context ctx{cfg, *spec, cfg.winding < 0 ? default_winding(cfg.cutoff) : cfg.winding, nullptr, nullptr,
                enumerate_characters(spec->group())};
    try {
      ctx.sc = std::make_shared<TwistedComplex>(sc_curve_data(ctx.spec, ctx.winding));
      ctx.cf = std::make_shared<TwistedComplex>(cf_curve_data(ctx.spec, cfg.convention));
      const bool hilbert = cfg.command == "sectors" || cfg.command == "verify";
      const bool ks = cfg.command == "ks" || cfg.command == "verify";
      if (hilbert || ks) {
        Json sectors = Json::array();
        for (const Character& chi : ctx.chars) {
          Json s = hilbert ? hilbert_sector(ctx, chi, checks) : Json{{"chi", chi.str()}};
          if (ks) s["ks_status"] = ks_sector(ctx, chi, checks);
          sectors.push_back(std::move(s));
        }
        rep["sectors"] = sectors;
      }
      if (ks && spec->group().rank() == 1) {
        const int n = static_cast<int>(spec->group().order());
        if (n >= 2) {
          const KSConstants k = ks_constants(n);
          rep["ks_constants"] = {{"n", n}, {"c_x", k.cx.str()}, {"c_y", k.cy.str()}, {"c_z", k.cz.str()}};
          const bool ok = k.cx == CycNum(-1) && k.cy == CycNum(1) && k.cz.is_zero();
          checks.add("ks constants c_x = -1, c_y = 1, c_z = 0", ok,
                     ok ? "" : "got " + k.cx.str() + ", " + k.cy.str() + ", " + k.cz.str());
        }
      }
      if (cfg.command == "mf" || cfg.command == "verify") rep["mf"] = mf_json(ctx, checks);
      if (cfg.command == "verify") verify_extras(ctx, rep, checks);
    } catch (const Error& e) {
      checks.add("pipeline", false, e.what());
    }
  }
  rep["verdict"] = checks.json();
  res.first_failure = checks.first();
  res.exit_code = checks.ok() ? 0 : 1;
  return res;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const Json& e : v) s += (s.empty() ? "" : " ") + cell(e);
    return s;
  }
  return v.dump();
}

}  // namespace

std::string to_markdown(const Json& r) {
  std::ostringstream o;
  o << "# " << cell(r.value("command", Json("report"))) << "\n\n";
  if (r.contains("cover")) {
    o << "## Cover\n\n| field | value |\n|---|---|\n";
    for (const auto& [k, v] : r["cover"].items()) o << "| " << k << " | " << cell(v) << " |\n";
    o << "\n";
  }
  if (r.contains("sectors")) {
    o << "## Sectors\n\n| chi | SC | CF | Kos | KS |\n|---|---|---|---|---|\n";
    for (const Json& s : r["sectors"]) {
      const Json ks = s.value("ks_status", Json("not run"));
      o << "| " << cell(s["chi"]) << " | " << cell(s.value("sc_hilbert", Json(""))) << " | "
        << cell(s.value("cf_hilbert", Json(""))) << " | " << cell(s.value("kos_hilbert", Json(""))) << " | "
        << (ks.is_object() ? cell(ks["status"]) : cell(ks)) << " |\n";
    }
    o << "\n";
  }
  if (r.contains("ks_constants")) {
    o << "## KS constants\n\n";
    for (const auto& [k, v] : r["ks_constants"].items()) o << "- " << k << " = " << cell(v) << "\n";
    o << "\n";
  }
  if (r.contains("mf")) {
    const Json& mf = r["mf"];
    o << "## Matrix factorizations\n\n";
    for (const Json& d : mf["delta"])
      o << "- " << cell(d["chi"]) << ": delta^2 = potential: " << cell(d["delta_squared_is_potential"]) << "\n";
    o << "- D^2 = 0 on hom complexes: " << cell(mf["hom_d_squared_zero"]) << "\n\n";
    if (mf.contains("products") && mf["products"].is_array()) {
      o << "| product | expected | solver | raw | class |\n|---|---|---|---|---|\n";
      for (const Json& p : mf["products"])
        o << "| " << cell(p["product"]) << " | " << cell(p["expected"]) << " | " << cell(p["solver"]) << " | "
          << cell(p["raw_match"]) << " | " << cell(p["class_match"]) << " |\n";
      o << "\n";
    } else if (mf.contains("products")) {
      o << "Products: " << cell(mf["products"]) << "\n\n";
    }
  }
  const Json& v = r["verdict"];
  o << "## Verdict: " << (v["pass"].get<bool>() ? "PASS" : "FAIL") << "\n\n| check | pass | detail |\n|---|---|---|\n";
  for (const Json& c : v["checks"])
    o << "| " << cell(c["name"]) << " | " << cell(c["pass"]) << " | " << cell(c.value("detail", Json(""))) << " |\n";
  return o.str();
}

}  // namespace ppm::cli
