#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schubert/cli.hpp"
#include "schubert/errors.hpp"

namespace {

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw schubert::DomainError("bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using schubert::cli::RunConfig;
  CLI::App app{"Cellular homology of real flag manifolds of type A"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string k_list, theta_list, out_path;
  bool k_given = false, theta_given = false;

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    auto* n_opt = sub->add_option("--n", cfg.n, "rank parameter: flags in R^n");
    if (needs_n) n_opt->required();
    auto* k = sub->add_option("--k", k_list, "k-set, comma separated (descent positions)");
    auto* t = sub->add_option("--theta", theta_list, "Theta, comma separated simple-root indices");
    k->excludes(t);
    sub->add_option("--format", cfg.format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", out_path, "write output to FILE");
    sub->add_flag("--allow-large", cfg.allow_large, "lift the size cap (prints a cost estimate)");
    sub->callback([&, k, t, sub] {
      cfg.command = sub->get_name();
      k_given = k->count() > 0;
      theta_given = t->count() > 0;
    });
  };

  auto* homology = app.add_subcommand("homology", "integral homology via Smith normal form");
  add_common(homology, true);
  auto* poincare = app.add_subcommand("poincare", "P, FP and TP polynomials");
  add_common(poincare, true);
  auto* incidence = app.add_subcommand("incidence", "DOT incidence diagram of the boundary map");
  add_common(incidence, true);
  auto* generators = app.add_subcommand("generators", "explicit cycles from the closed forms");
  add_common(generators, true);
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--tier", cfg.tier, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--out", out_path, "write output to FILE");
  verify->callback([&] { cfg.command = "verify"; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (k_given) cfg.k = parse_list(k_list);
    if (theta_given) cfg.theta = parse_list(theta_list);
    if (cfg.command == "incidence" && cfg.format == "text") cfg.format = "dot";

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw schubert::DomainError("cannot open " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (cfg.command == "verify") return schubert::cli::cmd_verify(cfg, out);
    if (cfg.command == "homology") out << schubert::cli::cmd_homology(cfg);
    if (cfg.command == "poincare") out << schubert::cli::cmd_poincare(cfg);
    if (cfg.command == "incidence") out << schubert::cli::cmd_incidence(cfg);
    if (cfg.command == "generators") out << schubert::cli::cmd_generators(cfg);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
