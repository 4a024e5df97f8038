#include <fstream>
#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "report.hpp"

int main(int argc, char** argv) {
  using namespace ppm::cli;
  CLI::App app{"Exact mirror-symmetry checks for abelian covers of the pair of pants"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  std::string convention = "appendixA";
  const std::pair<const char*, const char*> commands[] = {
      {"cover-info", "Genus, punctures and per-end counts of the cover"},
      {"sectors", "Sector Hilbert functions of SC, CF and Kos against the oracle"},
      {"ks", "Solve the Kodaira-Spencer chain map in every sector and check it"},
      {"mf", "Matrix factorization identities and the twisted product table"},
      {"verify", "All of the above plus Psi, sector sum, invariant parts and ring match"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--group", cfg.group, "Deck group, e.g. Z2, Z2xZ4")->capture_default_str();
    sub->add_option("--ga", cfg.ga, "g_alpha as comma-separated tuple")->capture_default_str();
    sub->add_option("--gb", cfg.gb, "g_beta as comma-separated tuple")->capture_default_str();
    sub->add_option("--cutoff", cfg.cutoff, "Tripled degree cutoff")->capture_default_str();
    sub->add_option("--winding", cfg.winding, "Winding cutoff (default cutoff/2)");
    sub->add_option("--convention", convention, "appendixA or cfkos-subst")
        ->check(CLI::IsMember({"appendixA", "cfkos-subst"}))
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.convention = ppm::parse_convention(convention);

  const RunResult res = run(cfg);
  if (res.exit_code == 2) {
    std::cerr << "config error: " << res.first_failure << "\n";
    return 2;
  }
  const std::string text = cfg.format == "json" ? res.report.dump(2) + "\n" : to_markdown(res.report);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  if (res.exit_code != 0) std::cerr << "FAILED: " << res.first_failure << "\n";
  return res.exit_code;
}
