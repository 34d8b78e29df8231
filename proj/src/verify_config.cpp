#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "holo/verify.hpp"

namespace holo::verify {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table{
      // orthonormal
      {"gram_identity", 1e-8},
      {"gram_hermitian", 1e-12},
      {"psi0_origin", 1e-14},
      // reproduce
      {"ks_reproduce", 1e-8},
      {"mehler", 1e-9},
      {"ks_origin", 1e-15},
      {"abc_residual", 1e-13},
      {"weight_equality", 1e-13},
      {"phi_projection", 1e-7},
      {"idempotence", 1e-6},
      {"zero_input", 1e-15},
      // ellipse
      {"weight_identity", 1e-14},
      {"ellipse_gram", 1e-8},
      {"ellipse_rodrigues", 1e-9},
      {"ellipse_norm0", 1e-10},
      {"mu_lambda", 1e-15},
      {"monomial_gram", 1e-10},
      {"bargmann_unitarity", 1e-8},
      {"bargmann_pointwise", 1e-9},
      // isomorphism
      {"iso_isometry", 1e-8},
      {"iso_unrooted_scaling", 1e-2},
      {"iso_round_trip", 1e-12},
      {"hermite_correspondence", 1e-11},
      {"bt_star_gram", 1e-6},
      {"ks_doubled_exponent", 1e-2},
      {"ks_via_isomorphism", 1e-13},
      // kernels
      {"g1_nested", 1e-6},
      {"g2_nested", 1e-6},
      {"g1_flipped_sign", 1e-2},
      {"g_prefactor", 1e-15},
      {"c_phi_squared", 1e-8},
      {"c_phi_linear", 1e-2},
      {"c_phi_linear_factor", 1e-8},
  };
  return table;
}

double SuiteConfig::tolerance(const std::string& check) const {
  if (const auto it = tolerances.find(check); it != tolerances.end()) return it->second;
  const auto& defaults = default_tolerances();
  if (const auto it = defaults.find(check); it != defaults.end()) return it->second;
  throw ConfigError("no tolerance for check '" + check + "'");
}

std::vector<std::pair<double, double>> SuiteConfig::effective_ellipses() const {
  if (!ellipse_params.empty()) return ellipse_params;
  std::vector<std::pair<double, double>> out;
  for (const double s : s_values) out.emplace_back(std::sqrt(s), 0.0);
  out.emplace_back(0.8, 0.4);
  return out;
}

void SuiteConfig::validate() const {
  if (s_values.empty()) throw ConfigError("s_values must not be empty");
  for (const double s : s_values) {
    if (!(s > 0.0 && s < 1.0)) throw ConfigError("every s must lie in (0, 1)");
  }
  for (const auto& [a, b] : ellipse_params) {
    if (!(a > 0.0) || !std::isfinite(b)) throw ConfigError("ellipse parameters need alpha > 0 and finite beta");
    if (a == 1.0 && b == 0.0) throw ConfigError("ellipse parameters (1, 0) are excluded");
  }
  if (n_max < 0 || n_max > 24) throw ConfigError("n_max must lie in [0, 24]");
  if (nodes < 1 || nodes > 2000) throw ConfigError("nodes must lie in [1, 2000]");
  for (const auto& [key, value] : tolerances) {
    if (!default_tolerances().contains(key)) throw ConfigError("unknown tolerance key '" + key + "'");
    if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError("tolerance." + key + " must be positive");
  }
  if (!(ks_prefactor_scale > 0.0) || !std::isfinite(ks_prefactor_scale)) {
    throw ConfigError("ks_prefactor_scale must be positive");
  }
  if (output_path.empty()) throw ConfigError("output_path must not be empty");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ConfigError(key + ": '" + text + "' is not a number");
  return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ConfigError(key + ": '" + text + "' is not an integer");
  return v;
}

}  // namespace

SuiteConfig parse_config(std::istream& in) {
  SuiteConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "s_values") {
      cfg.s_values.clear();
      for (const auto& item : split(value, ',')) cfg.s_values.push_back(parse_double(key, item));
    } else if (key == "ellipse_params") {
      cfg.ellipse_params.clear();
      for (const auto& item : split(value, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw ConfigError("ellipse_params: expected alpha:beta, got '" + item + "'");
        cfg.ellipse_params.emplace_back(parse_double(key, parts[0]), parse_double(key, parts[1]));
      }
    } else if (key == "n_max") {
      cfg.n_max = static_cast<int>(parse_integer(key, value));
    } else if (key == "nodes") {
      cfg.nodes = static_cast<int>(parse_integer(key, value));
    } else if (key == "seed") {
      const long long seed = parse_integer(key, value);
      if (seed < 0) throw ConfigError("seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(seed);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else if (key == "ks_prefactor_scale") {
      cfg.ks_prefactor_scale = parse_double(key, value);
    } else if (key.starts_with("tolerance.")) {
      const std::string check = key.substr(std::string("tolerance.").size());
      if (!default_tolerances().contains(check)) throw ConfigError("unknown tolerance key '" + check + "'");
      cfg.tolerances[check] = parse_double(key, value);
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace holo::verify
