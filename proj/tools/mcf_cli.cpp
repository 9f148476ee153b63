// mcf: verify multiple commutator formulas over small finite rings.
//
//   mcf verify --ring "Z/8" --ideals "(2),(2)" --n 3 --theorem generalized
//   mcf verify --quick --json report.json

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mcf/mcf.hpp"

namespace {

void print_summary(const mcf::VerifyReport& rep) {
  for (const auto& v : rep.verdicts) {
    std::cout << (v.status == mcf::Status::verified ? "ok   " : v.status == mcf::Status::mismatch ? "FAIL " : "skip ")
              << v.ring << " n=" << v.n << " " << v.formula;
    if (v.lhs_order) std::cout << "  |lhs|=" << *v.lhs_order << " |rhs|=" << *v.rhs_order;
    if (v.degenerate) std::cout << "  (degenerate)";
    if (v.note) std::cout << "  " << *v.note;
    std::cout << "\n";
  }
  for (const auto& l : rep.lemma_checks)
    std::cout << (l.capped ? "skip " : l.passed ? "ok   " : "FAIL ") << l.name << " " << l.config << "  " << l.detail
              << "\n";
  const auto t = rep.totals();
  std::cout << t.verified << " verified, " << t.mismatched << " mismatched, " << t.not_verified
            << " not verified at this scale (" << t.degenerate << " degenerate); lemmas " << t.lemmas_passed
            << " passed, " << t.lemmas_failed << " failed, " << t.lemmas_capped << " capped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple commutator formula verifier"};
  app.require_subcommand(1);
  mcf::RunConfig cfg;
  std::string json_path;
  bool quick = false, flagship = false;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--ring", cfg.ring, "ring spec, e.g. Z/8, Z/2[x]/(x^3), UT2(Z/2)")->capture_default_str();
  verify->add_option("--ideals", cfg.ideals, "ideal specs, e.g. \"(2),(2)\"")->capture_default_str();
  verify->add_option("--n", cfg.n, "matrix size (3 or 4)")->capture_default_str();
  verify->add_option("--theorem", cfg.theorem, "formula to check")
      ->check(CLI::IsMember(mcf::theorem_names()))
      ->capture_default_str();
  verify->add_option("--tree", cfg.tree, "bracketing for arrangements, e.g. \"[0,[1,2]]\"");
  verify->add_option("--slots", cfg.slots, "slot kinds for arrangements, e.g. \"E,GL,GL\"");
  verify->add_option("--cap-members", cfg.caps.members, "member cap per subgroup")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "random cases per lemma suite")->capture_default_str();
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  auto* q = verify->add_flag("--quick", quick, "fixed suite over rings of order <= 8");
  verify->add_flag("--flagship", flagship, "quick suite plus the Z/16 cases")->excludes(q);
  verify->add_flag("--timing", cfg.timing, "include elapsed times in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : mcf::exit_config;
  }
  if (quick) cfg.profile = "quick";
  if (flagship) cfg.profile = "flagship";

  try {
    const mcf::VerifyReport rep = mcf::run_verification(cfg);
    const std::string text = mcf::to_json(rep).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      print_summary(rep);
      if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!(out << text)) {
          std::cerr << "error: cannot write " << json_path << "\n";
          return mcf::exit_config;
        }
      }
    }
    return rep.exit_code();
  } catch (const mcf::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mcf::exit_cap;
  } catch (const mcf::Error& e) {
    std::cerr << "error (" << mcf::to_string(e.code()) << "): " << e.what() << "\n";
    return mcf::exit_config;
  }
}
