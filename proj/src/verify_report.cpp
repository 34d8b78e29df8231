#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>

#include "holo/verify.hpp"

namespace holo::verify {

bool VerificationReport::numerical_error() const {
  for (const auto& c : cases) {
    if (c.numerical_error) return true;
  }
  return false;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  bool failed = false;
  for (const auto& r : reports) {
    if (r.numerical_error()) return 3;
    failed = failed || !r.pass;
  }
  return failed ? 1 : 0;
}

namespace {

nlohmann::ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

nlohmann::ordered_json config_json(const SuiteConfig& cfg) {
  nlohmann::ordered_json j;
  j["s_values"] = cfg.s_values;
  nlohmann::ordered_json ellipses = nlohmann::ordered_json::array();
  for (const auto& [a, b] : cfg.effective_ellipses()) ellipses.push_back({a, b});
  j["ellipse_params"] = ellipses;
  j["n_max"] = cfg.n_max;
  j["nodes"] = cfg.nodes;
  nlohmann::ordered_json tol = nlohmann::ordered_json::object();
  for (const auto& [key, value] : default_tolerances()) tol[key] = cfg.tolerance(key);
  j["tolerances"] = tol;
  j["seed"] = cfg.seed;
  j["output_path"] = cfg.output_path;
  j["ks_prefactor_scale"] = cfg.ks_prefactor_scale;
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["anchor"] = report.anchor;
  j["config"] = config_json(report.config);
  j["max_residual"] = finite_or_null(report.max_residual);
  j["pass"] = report.pass;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["check"] = c.check;
    jc["criterion"] = c.criterion;
    jc["kind"] = c.kind == CaseKind::must_pass ? "must_pass" : "must_exceed";
    jc["residual"] = finite_or_null(c.residual);
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    jc["numerical_error"] = c.numerical_error;
    jc["note"] = c.note;
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    for (const double r : c.residuals) rs.push_back(finite_or_null(r));
    jc["residuals"] = rs;
    cases.push_back(jc);
  }
  j["cases"] = cases;
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "suite,case,residual,tolerance,pass\n";
  out << std::setprecision(17);
  for (const auto& r : reports) {
    for (const auto& c : r.cases) {
      out << r.suite << ",\"" << c.id << "\",";
      if (std::isfinite(c.residual)) {
        out << c.residual;
      } else {
        out << "inf";
      }
      out << ',' << c.tolerance << ',' << (c.pass ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::vector<std::string> write_reports(const std::vector<VerificationReport>& reports, const std::string& dir,
                                       const std::string& format) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  const auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    written.push_back(path.string());
  };
  if (format == "json") {
    for (const auto& r : reports) write(std::filesystem::path(dir) / (r.suite + ".json"), to_json(r));
  } else if (format == "csv") {
    write(std::filesystem::path(dir) / "report.csv", to_csv(reports));
  } else {
    throw ConfigError("format must be json or csv");
  }
  return written;
}

std::vector<cplx> disk_points(std::uint64_t seed, std::uint64_t stream, int count, double radius) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    out.push_back(std::polar(r, theta));
  }
  return out;
}

}  // namespace holo::verify
