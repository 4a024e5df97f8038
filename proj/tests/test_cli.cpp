#include "doctest.h"
#include "report.hpp"

using namespace ppm::cli;

namespace {

RunConfig config(const std::string& cmd, const std::string& g, const std::string& a, const std::string& b,
                 int cutoff = 12) {
  RunConfig c;
  c.command = cmd;
  c.group = g;
  c.ga = a;
  c.gb = b;
  c.cutoff = cutoff;
  return c;
}

}  // namespace

TEST_CASE("cover-info on Z3 x Z3") {
  const RunResult r = run(config("cover-info", "Z3xZ3", "1,0", "0,1"));
  CHECK(r.exit_code == 0);
  CHECK(r.report["cover"]["punctures"] == 9);
  CHECK(r.report["cover"]["genus"] == 1);
  CHECK(r.report["cover"]["closed_formula"]["punctures"] == 9);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run(config("cover-info", "Z4", "2", "2")).exit_code == 2);
  CHECK(run(config("cover-info", "Zx", "1", "1")).exit_code == 2);
  CHECK(run(config("cover-info", "Z2", "1,1", "1")).exit_code == 2);
  CHECK(run(config("nope", "Z2", "1", "1")).exit_code == 2);
  CHECK(run(config("sectors", "Z2", "1", "1", 2)).exit_code == 2);
}

TEST_CASE("verify on the Z2 cover") {
  const RunResult r = run(config("verify", "Z2", "1", "1"));
  CHECK_MESSAGE(r.exit_code == 0, r.first_failure);
  const Json& rep = r.report;
  CHECK(rep["cover"]["punctures"] == 4);
  CHECK(rep["cover"]["genus"] == 0);
  REQUIRE(rep["sectors"].size() == 2);
  for (const Json& s : rep["sectors"]) {
    CHECK(s["sc_hilbert"] == s["cf_hilbert"]);
    CHECK(s["cf_hilbert"] == s["kos_hilbert"]);
    CHECK(s["ks_status"]["status"] == "quasi-isomorphism");
  }
  CHECK(rep["verdict"]["pass"] == true);
  for (const char* key : {"cover", "sectors", "mf", "verdict"}) CHECK(rep.contains(key));
}

TEST_CASE("mf prints the product table") {
  const RunResult r = run(config("mf", "Z2", "1", "1"));
  CHECK(r.exit_code == 0);
  const Json& p = r.report["mf"]["products"];
  REQUIRE(p.size() == 3);
  CHECK(p[0]["solver"] == "1/4*z^2");
  CHECK(p[1]["solver"] == "-1/2*x*z*th_x + 1/4*y*z*th_y + 1/4*z^2*th_z");
  CHECK(to_markdown(r.report).find("Verdict: PASS") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const RunConfig c = config("verify", "Z3", "1", "1", 9);
  CHECK(run(c).report.dump() == run(c).report.dump());
  CHECK(to_markdown(run(c).report) == to_markdown(run(c).report));
}

TEST_CASE("cfkos-subst convention") {
  RunConfig c = config("sectors", "Z2xZ2", "1,0", "0,1", 9);
  c.convention = ppm::Convention::CfkosSubst;
  const RunResult r = run(c);
  CHECK_MESSAGE(r.exit_code == 0, r.first_failure);
  CHECK(r.report["config"]["convention"] == "cfkos-subst");
}
