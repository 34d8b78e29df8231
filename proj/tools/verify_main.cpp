#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>

#include "holo/verify.hpp"

namespace {

using holo::verify::CaseKind;

void print_report(const holo::verify::VerificationReport& r) {
  std::printf("[%s] %s\n", r.suite.c_str(), r.anchor.c_str());
  for (const auto& c : r.cases) {
    std::printf("  %-4s %-42s residual %-10.3e %s %.0e  %6.2f s%s\n", c.pass ? "ok" : "FAIL", c.id.c_str(), c.residual,
                c.kind == CaseKind::must_pass ? "<" : ">=", c.tolerance, c.seconds, c.numerical_error ? "  (non-finite)" : "");
    if (!c.pass && !c.note.empty()) std::printf("       %s\n", c.note.c_str());
  }
  std::printf("  %s  max residual %.3e  %.1f s\n", r.pass ? "PASS" : "FAIL", r.max_residual, r.wall_time);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of the holomorphic Hermite spaces and Bargmann-type transforms"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  std::optional<double> s;
  std::optional<int> n_max;
  std::optional<int> nodes;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::string format = "json";
  std::optional<double> ks_scale;

  app.add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--s", s, "run a single s in (0, 1)");
  app.add_option("--nmax", n_max, "highest degree in the Gram checks (<= 24)");
  app.add_option("--nodes", nodes, "quadrature nodes per axis");
  app.add_option("--seed", seed, "seed for the random sample points");
  app.add_option("--out", out, "report directory");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--ks-prefactor-scale", ks_scale, "multiply the K_s prefactor (harness self-test)")
      ->group("Testing");

  std::vector<std::string> names;
  app.add_subcommand("run-all", "run every suite");
  for (const auto& name : holo::verify::suite_names()) app.add_subcommand(name, "run the " + name + " suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (command != "run-all") names.push_back(command);

  holo::verify::SuiteConfig cfg;
  try {
    if (!config_path.empty()) cfg = holo::verify::load_config(config_path);
    if (s) cfg.s_values = {*s};
    if (n_max) cfg.n_max = *n_max;
    if (nodes) cfg.nodes = *nodes;
    if (seed) cfg.seed = *seed;
    if (out) cfg.output_path = *out;
    if (ks_scale) cfg.ks_prefactor_scale = *ks_scale;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto result = holo::verify::run_suites(cfg, names);
    for (const auto& r : result.reports) print_report(r);
    for (const auto& path : holo::verify::write_reports(result.reports, cfg.output_path, format)) {
      std::printf("wrote %s\n", path.c_str());
    }
    return result.exit_code;
  } catch (const holo::verify::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
