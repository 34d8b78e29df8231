#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holo/exp_scaled.hpp"

namespace holo::verify {

/// Bad configuration: unknown key, unparsable value, or a violated invariant.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::vector<double> s_values{0.25, 0.5, 0.75};
  /// Empty means the default: (sqrt(s), 0) for each s, then (0.8, 0.4).
  std::vector<std::pair<double, double>> ellipse_params;
  int n_max = 12;
  int nodes = 201;
  /// Overrides of the per-check tolerances; see default_tolerances().
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 42;
  std::string output_path = "reports";
  /// Multiplies the K_s prefactor everywhere the suites use it. Anything but
  /// 1 is a deliberate corruption for checking that the harness can fail.
  double ks_prefactor_scale = 1.0;

  [[nodiscard]] double tolerance(const std::string& check) const;
  [[nodiscard]] std::vector<std::pair<double, double>> effective_ellipses() const;
  /// Throws ConfigError.
  void validate() const;
};

/// Tolerance of every check by name.
const std::map<std::string, double>& default_tolerances();

/// key = value lines; '#' starts a comment. Keys are the SuiteConfig field
/// names, with tolerances given as tolerance.<check>. Lists are
/// comma-separated; an ellipse is alpha:beta. Throws ConfigError.
SuiteConfig parse_config(std::istream& in);
SuiteConfig load_config(const std::string& path);

enum class CaseKind {
  must_pass,    // residual < tolerance
  must_exceed,  // residual >= tolerance: the variant is expected to fail
};

struct CaseResult {
  std::string id;         // e.g. "gram_identity s=0.5"
  std::string check;      // tolerance key, e.g. "gram_identity"
  std::string criterion;  // acceptance criterion number, or empty
  CaseKind kind = CaseKind::must_pass;
  double residual = 0.0;  // +inf when the computation could not be carried out
  double tolerance = 0.0;
  bool pass = false;
  bool numerical_error = false;
  std::string note;
  std::vector<double> residuals;  // per-item breakdown when there is one
  double seconds = 0.0;           // wall time; kept out of the reports
};

struct VerificationReport {
  std::string suite;
  std::string anchor;
  SuiteConfig config;
  std::vector<CaseResult> cases;
  double max_residual = 0.0;  // over must_pass cases
  bool pass = true;
  double wall_time = 0.0;

  [[nodiscard]] bool numerical_error() const;
};

VerificationReport suite_orthonormal(const SuiteConfig& cfg);
VerificationReport suite_reproduce(const SuiteConfig& cfg);
VerificationReport suite_ellipse(const SuiteConfig& cfg);
VerificationReport suite_isomorphism(const SuiteConfig& cfg);
VerificationReport suite_kernels(const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

struct RunResult {
  std::vector<VerificationReport> reports;
  int exit_code = 0;
};

/// Runs the named suites (all of them when empty) to completion.
RunResult run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names = {});

/// 0 all pass, 1 some case failed, 3 a non-finite value was encountered.
int exit_code_for(const std::vector<VerificationReport>& reports);

/// JSON without wall times, so re-runs are byte-identical.
std::string to_json(const VerificationReport& report);
/// suite,case,residual,tolerance,pass rows.
std::string to_csv(const std::vector<VerificationReport>& reports);

/// Writes <dir>/<suite>.json per report, or <dir>/report.csv; returns the
/// paths written.
std::vector<std::string> write_reports(const std::vector<VerificationReport>& reports, const std::string& dir,
                                       const std::string& format);

/// `count` points uniform in |z| <= radius from (seed, stream).
std::vector<cplx> disk_points(std::uint64_t seed, std::uint64_t stream, int count, double radius);

}  // namespace holo::verify
