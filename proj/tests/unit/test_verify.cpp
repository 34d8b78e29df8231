#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/verify.hpp"

using namespace holo;
using namespace holo::verify;

namespace {
SuiteConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.s_values = {0.5};
  cfg.n_max = 4;
  cfg.nodes = 81;
  return cfg;
}
}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("defaults") {
    const SuiteConfig cfg;
    CHECK(cfg.s_values == std::vector<double>{0.25, 0.5, 0.75});
    CHECK(cfg.n_max == 12);
    CHECK(cfg.nodes == 201);
    CHECK(cfg.seed == 42);
    CHECK_NOTHROW(cfg.validate());
    const auto ellipses = cfg.effective_ellipses();
    REQUIRE(ellipses.size() == 4);
    CHECK(ellipses[1].first == doctest::Approx(std::sqrt(0.5)));
    CHECK(ellipses[1].second == 0.0);
    CHECK(ellipses[3] == std::pair<double, double>{0.8, 0.4});
    CHECK(cfg.tolerance("gram_identity") == 1e-8);
    CHECK(cfg.tolerance("mehler") == 1e-9);
    CHECK(cfg.tolerance("bt_star_gram") == 1e-6);
    CHECK_THROWS_AS((void)cfg.tolerance("nonsense"), ConfigError);
    for (const auto& [key, value] : default_tolerances()) CHECK(value > 0.0);
  }

  TEST_CASE("config parsing") {
    const auto cfg = parse(
        "# comment\n"
        "s_values = 0.3, 0.6\n"
        "ellipse_params = 0.8:0.4, 1.2:-0.5   # trailing comment\n"
        "n_max = 7\n"
        "nodes = 101\n"
        "seed = 9\n"
        "output_path = out/dir\n"
        "tolerance.mehler = 1e-10\n"
        "\n");
    CHECK(cfg.s_values == std::vector<double>{0.3, 0.6});
    CHECK(cfg.ellipse_params == std::vector<std::pair<double, double>>{{0.8, 0.4}, {1.2, -0.5}});
    CHECK(cfg.n_max == 7);
    CHECK(cfg.nodes == 101);
    CHECK(cfg.seed == 9);
    CHECK(cfg.output_path == "out/dir");
    CHECK(cfg.tolerance("mehler") == 1e-10);
    CHECK(cfg.tolerance("gram_identity") == 1e-8);
  }

  TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse("unknown_key = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse("tolerance.nope = 1e-3\n"), ConfigError);
    CHECK_THROWS_AS(parse("n_max 12\n"), ConfigError);
    CHECK_THROWS_AS(parse("n_max = 12x\n"), ConfigError);
    CHECK_THROWS_AS(parse("s_values = 0.5, abc\n"), ConfigError);
    CHECK_THROWS_AS(parse("ellipse_params = 0.8\n"), ConfigError);
    CHECK_THROWS_AS(parse("seed = -1\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.txt"), ConfigError);

    const auto invalid = [](auto mutate) {
      SuiteConfig cfg;
      mutate(cfg);
      return cfg;
    };
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.s_values = {1.0}; }).validate(), ConfigError);
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.s_values = {}; }).validate(), ConfigError);
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.n_max = 25; }).validate(), ConfigError);
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.nodes = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.tolerances["mehler"] = 0.0; }).validate(), ConfigError);
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.ellipse_params = {{1.0, 0.0}}; }).validate(), ConfigError);
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.ellipse_params = {{-0.5, 0.0}}; }).validate(), ConfigError);
    CHECK_THROWS_AS(invalid([](SuiteConfig& c) { c.ks_prefactor_scale = 0.0; }).validate(), ConfigError);
    CHECK_THROWS_AS(run_suites(invalid([](SuiteConfig& c) { c.n_max = -1; })), ConfigError);
    CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), ConfigError);
  }

  TEST_CASE("disk points are seeded, inside the disk and stream-separated") {
    const auto a = disk_points(42, 1, 1000, 1.5);
    const auto b = disk_points(42, 1, 1000, 1.5);
    const auto c = disk_points(42, 2, 1000, 1.5);
    CHECK(a == b);
    CHECK(a != c);
    double max_r = 0.0;
    int inner = 0;
    for (const cplx z : a) {
      max_r = std::max(max_r, std::abs(z));
      inner += std::abs(z) < 1.5 / std::sqrt(2.0);
    }
    CHECK(max_r <= 1.5);
    CHECK(max_r > 1.45);
    // uniform in area: half the points inside radius R / sqrt 2
    CHECK(inner > 430);
    CHECK(inner < 570);
  }

  TEST_CASE("orthonormal suite and report determinism") {
    const auto cfg = small_config();
    const auto r1 = suite_orthonormal(cfg);
    const auto r2 = suite_orthonormal(cfg);
    CHECK(r1.pass);
    CHECK(r1.max_residual < 1e-12);
    CHECK(r1.cases.size() == 3);
    CHECK(to_json(r1) == to_json(r2));
    CHECK(to_json(r1).find("wall_time") == std::string::npos);
    CHECK(to_json(r1).find("\"anchor\"") != std::string::npos);
    CHECK(exit_code_for({r1}) == 0);
  }

  TEST_CASE("pass is equivalent to residuals within tolerance") {
    auto cfg = small_config();
    cfg.tolerances["gram_identity"] = 1e-30;
    const auto r = suite_orthonormal(cfg);
    CHECK_FALSE(r.pass);
    CHECK(exit_code_for({r}) == 1);
    for (const auto& c : r.cases) {
      CHECK(c.pass == (c.residual < c.tolerance));
    }
  }

  TEST_CASE("corrupting the K_s prefactor fails the reproduce checks") {
    auto cfg = small_config();
    cfg.ks_prefactor_scale = 1.01;
    const auto r = suite_reproduce(cfg);
    CHECK_FALSE(r.pass);
    int checked = 0;
    for (const auto& c : r.cases) {
      if (c.check == "ks_reproduce" || c.check == "mehler" || c.check == "ks_origin") {
        CHECK_FALSE(c.pass);
        ++checked;
      }
    }
    CHECK(checked == 3);
    cfg.ks_prefactor_scale = 1.0;
    CHECK(suite_reproduce(cfg).pass);
  }

  TEST_CASE("expected failures are asserted as failures") {
    auto cfg = small_config();
    const auto r = suite_isomorphism(cfg);
    bool found = false;
    for (const auto& c : r.cases) {
      if (c.kind != CaseKind::must_exceed) continue;
      found = true;
      CHECK(c.pass);
      CHECK(c.residual >= c.tolerance);
    }
    CHECK(found);
  }

  TEST_CASE("CSV and files") {
    const auto cfg = small_config();
    const auto r = suite_orthonormal(cfg);
    const std::string csv = to_csv({r});
    CHECK(csv.rfind("suite,case,residual,tolerance,pass\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    const auto dir = std::filesystem::temp_directory_path() / "holo_verify_test";
    std::filesystem::remove_all(dir);
    const auto json_paths = write_reports({r}, dir.string(), "json");
    REQUIRE(json_paths.size() == 1);
    std::ifstream in(json_paths[0]);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == to_json(r));
    const auto csv_paths = write_reports({r}, dir.string(), "csv");
    REQUIRE(csv_paths.size() == 1);
    CHECK(std::filesystem::path(csv_paths[0]).filename() == "report.csv");
    CHECK_THROWS_AS(write_reports({r}, dir.string(), "xml"), ConfigError);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("non-finite values map to exit code 3") {
    VerificationReport r;
    CaseResult c;
    c.residual = INFINITY;
    c.numerical_error = true;
    r.cases.push_back(c);
    r.pass = false;
    CHECK(exit_code_for({r}) == 3);
    CHECK(to_json(r).find("null") != std::string::npos);
    CHECK(to_csv({r}).find(",inf,") != std::string::npos);
  }
}
