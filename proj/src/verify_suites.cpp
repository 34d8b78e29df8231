#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include "holo/errors.hpp"
#include "holo/hermite.hpp"
#include "holo/spaces.hpp"
#include "holo/transforms.hpp"
#include "holo/verify.hpp"

namespace holo::verify {

using hermite::SParam;
using transforms::PhaseParams;

namespace {

struct CaseSpec {
  std::string id;
  std::string check;
  std::string criterion;
  CaseKind kind = CaseKind::must_pass;
};

struct Measurement {
  double residual = 0.0;
  std::string note;
  std::vector<double> residuals;
};

class SuiteRun {
 public:
  SuiteRun(std::string name, std::string anchor, const SuiteConfig& cfg) : start_(Clock::now()) {
    report_.suite = std::move(name);
    report_.anchor = std::move(anchor);
    report_.config = cfg;
  }

  // Runs `body` once; it returns one Measurement per spec. Any exception
  // turns every spec into an infinite residual carrying the message.
  template <class F>
  void measure(const std::vector<CaseSpec>& specs, F&& body) {
    const auto t0 = Clock::now();
    std::vector<Measurement> results;
    std::string error;
    bool numerical = false;
    try {
      results = body();
    } catch (const EnvelopeError& e) {
      // For a must_exceed variant this is the expected outcome.
      error = std::string("not integrable: ") + e.what();
    } catch (const NumericalError& e) {
      error = std::string("numerical error: ") + e.what();
      numerical = true;
    } catch (const std::exception& e) {
      error = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    for (std::size_t i = 0; i < specs.size(); ++i) {
      CaseResult c;
      c.id = specs[i].id;
      c.check = specs[i].check;
      c.criterion = specs[i].criterion;
      c.kind = specs[i].kind;
      c.tolerance = report_.config.tolerance(c.check);
      c.seconds = seconds;
      if (error.empty()) {
        c.residual = results.at(i).residual;
        c.note = results.at(i).note;
        c.residuals = results.at(i).residuals;
      } else {
        c.residual = std::numeric_limits<double>::infinity();
        c.note = error;
        c.numerical_error = numerical;
      }
      if (std::isnan(c.residual)) {
        c.residual = std::numeric_limits<double>::infinity();
        c.numerical_error = true;
        c.note += c.note.empty() ? "non-finite residual" : "; non-finite residual";
      }
      c.pass = c.kind == CaseKind::must_pass ? c.residual < c.tolerance : c.residual >= c.tolerance;
      if (c.kind == CaseKind::must_exceed && c.numerical_error) c.pass = false;
      report_.cases.push_back(std::move(c));
    }
  }

  VerificationReport finish() {
    report_.max_residual = 0.0;
    report_.pass = true;
    for (const auto& c : report_.cases) {
      if (c.kind == CaseKind::must_pass) report_.max_residual = std::max(report_.max_residual, c.residual);
      report_.pass = report_.pass && c.pass;
    }
    report_.wall_time = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  using Clock = std::chrono::steady_clock;
  VerificationReport report_;
  Clock::time_point start_;
};

std::string num(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string s_label(double s) { return "s=" + num(s); }

std::string pair_label(double a, double b) { return "(" + num(a) + "," + num(b) + ")"; }

std::string sci(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

std::string fixed(double v, int digits = 12) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

// Distinct, fixed random streams per use.
enum Stream : std::uint64_t {
  kReproducePoints = 1,
  kMehlerZ,
  kMehlerZeta,
  kWeightPoints,
  kProjectionInputs,
  kProjectionPoints,
  kIdempotencePoints,
  kEllipseWeightPoints,
  kEllipseOraclePoints,
  kBargmannPoints,
  kIsoPoints,
  kIsoInputs,
  kCorrespondencePoints,
  kKernelPoints,
  kKernelPairs,
};

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, x);
  return m;
}

// |a - b| scaled by the size of b over the sample set, so zeros of b do
// not blow up the comparison.
double scaled_max_error(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double scale = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max(scale, std::abs(b[i]));
    err = std::max(err, std::abs(a[i] - b[i]));
  }
  return scale > 0.0 ? err / scale : err;
}

// Cached B T* compositions; the isomorphism and kernel suites share them.
std::shared_ptr<const transforms::BTStarComposition> composition(const std::string& label, const PhaseParams& p,
                                                                 SParam s, int n, int inner_nodes) {
  static std::mutex mutex;
  static std::map<std::tuple<std::string, double, int, int>, std::shared_ptr<const transforms::BTStarComposition>> cache;
  const auto key = std::make_tuple(label, s.value(), n, inner_nodes);
  {
    std::lock_guard lock(mutex);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
  }
  transforms::CompositionOptions options;
  options.inner_nodes = inner_nodes;
  auto made = std::make_shared<const transforms::BTStarComposition>(p, hermite::psi_s_function(n, s),
                                                                    hermite::kPsiDecay, options);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(made)).first->second;
}

// Random Gaussian-times-polynomial: (c0 + c1 z + c2 z^2 + c3 z^3) e^{-z^2/2}.
struct GaussianPolynomial {
  std::vector<cplx> coeffs;
  cplx gauss = -0.5;

  [[nodiscard]] ExpScaled operator()(cplx z) const {
    cplx p{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * z + *it;
    return ExpScaled::from_exponent(gauss * z * z, p);
  }
};

std::vector<GaussianPolynomial> random_inputs(std::uint64_t seed, std::uint64_t stream, int count, double gauss_spread) {
  const auto raw = disk_points(seed, stream, count * 5, 1.0);
  std::vector<GaussianPolynomial> out;
  for (int k = 0; k < count; ++k) {
    GaussianPolynomial f;
    f.coeffs.assign(raw.begin() + 5 * k, raw.begin() + 5 * k + 4);
    f.gauss = gauss_spread == 0.0 ? cplx(-0.5) : cplx(gauss_spread * raw[5 * k + 4].real());
    out.push_back(f);
  }
  return out;
}

}  // namespace

VerificationReport suite_orthonormal(const SuiteConfig& cfg) {
  SuiteRun run("orthonormal", "orthonormality of the holomorphic Hermite functions psi_n^s in X_s", cfg);
  const int N = cfg.n_max + 1;
  for (const double sv : cfg.s_values) {
    const SParam s(sv);
    const std::string tag = s_label(sv);
    run.measure({{"gram_identity " + tag, "gram_identity", "1"}, {"gram_hermitian " + tag, "gram_hermitian", ""}},
                [&] {
                  const auto gram = spaces::gram_matrix([&](int n) { return hermite::psi_s_function(n, s); }, N,
                                                        spaces::XsWeight{s}, hermite::kPsiPairDecay, cfg.nodes);
                  std::vector<double> rows(N, 0.0);
                  for (int m = 0; m < N; ++m) {
                    for (int n = 0; n < N; ++n) {
                      rows[m] = std::max(rows[m], std::abs(gram.at(m, n) - (m == n ? 1.0 : 0.0)));
                    }
                  }
                  return std::vector<Measurement>{
                      {gram.max_identity_deviation, "max |G - I| over psi_0..psi_" + std::to_string(N - 1), rows},
                      {gram.hermitian_residual, "max |G(m,n) - conj G(n,m)|", {}}};
                });
    run.measure({{"psi0_origin " + tag, "psi0_origin", ""}}, [&] {
      const double expected = std::sqrt((1.0 - sv) / (std::numbers::pi * std::sqrt(sv)));
      const double got = hermite::psi_s(0, s, 0.0).real();
      return std::vector<Measurement>{{std::abs(got - expected), "psi_0(0) = " + fixed(got), {}}};
    });
  }
  return run.finish();
}

VerificationReport suite_reproduce(const SuiteConfig& cfg) {
  SuiteRun run("reproduce",
               "reproducing kernel K_s of X_s; Mehler summation; T T* as the K_s operator when the abc condition holds",
               cfg);
  const auto points = disk_points(cfg.seed, kReproducePoints, 9, 1.0);
  for (const double sv : cfg.s_values) {
    const SParam s(sv);
    const std::string tag = s_label(sv);
    const spaces::WeightSpec xs = spaces::XsWeight{s};
    const auto ks = spaces::k_s_kernel_function(s, cfg.ks_prefactor_scale);
    const QuadraticDecay apply_decay = hermite::kPsiDecay + spaces::k_s_kernel_decay(s);

    run.measure({{"ks_reproduce " + tag, "ks_reproduce", "2"}}, [&] {
      std::vector<double> per_n;
      for (int n = 0; n <= 8; ++n) {
        const auto psi = hermite::psi_s_function(n, s);
        std::vector<cplx> got, want;
        for (const cplx z : points) {
          got.push_back(spaces::apply_kernel(ks, xs, psi, z, apply_decay, cfg.nodes));
          want.push_back(hermite::psi_s(n, s, z));
        }
        per_n.push_back(scaled_max_error(got, want));
      }
      return std::vector<Measurement>{
          {max_of(per_n), "relative to max |psi_n| over 9 points in |z| <= 1; residuals by n = 0..8", per_n}};
    });

    run.measure({{"mehler " + tag, "mehler", "3"}}, [&] {
      const auto zs = disk_points(cfg.seed, kMehlerZ, 9, 1.0);
      const auto ws = disk_points(cfg.seed, kMehlerZeta, 9, 1.0);
      std::vector<double> errs;
      double next_term = 0.0;
      for (std::size_t i = 0; i < zs.size(); ++i) {
        const cplx partial = spaces::mehler_partial_sum(s, 60, zs[i], ws[i]);
        errs.push_back(std::abs(partial - spaces::k_s_kernel(s, zs[i], ws[i], cfg.ks_prefactor_scale)));
        next_term = std::max(next_term, std::abs(hermite::psi_s(61, s, zs[i]) * std::conj(hermite::psi_s(61, s, ws[i]))));
      }
      return std::vector<Measurement>{{max_of(errs),
                                       "|sum_{n<=60} psi_n(z) conj psi_n(zeta) - K_s(z,zeta)|; largest omitted term "
                                       "|psi_61(z) psi_61(zeta)| = " + sci(next_term),
                                       errs}};
    });

    run.measure({{"ks_origin " + tag, "ks_origin", "2"}}, [&] {
      const double expected = (1.0 - sv * sv) / (2.0 * std::numbers::pi * sv);
      const cplx got = spaces::k_s_kernel(s, 0.0, 0.0, cfg.ks_prefactor_scale);
      return std::vector<Measurement>{
          {std::abs(got - expected), "K_s(0,0) = " + fixed(got.real()) + ", (1-s^2)/(2 pi s) = " + fixed(expected), {}}};
    });

    run.measure({{"zero_input reproduce " + tag, "zero_input", ""}}, [&] {
      const cplx got = spaces::apply_kernel(ks, xs, zero_function(), {0.3, 0.2}, apply_decay, cfg.nodes);
      return std::vector<Measurement>{{std::abs(got), "K_s applied to 0", {}}};
    });

    const std::vector<std::pair<std::string, PhaseParams>> abc_triples{
        {"g1", transforms::g1_triple(s)},
        {"g2", transforms::g2_triple(s)},
        {"t=-1.3", transforms::solve_abc(s, 1, -1.3)},
        {"t=0", transforms::solve_abc(s, 1, 0.0)},
        {"t=0.7", transforms::solve_abc(s, 1, 0.7)},
        {"t=2.5", transforms::solve_abc(s, 1, 2.5)},
        {"t=0.7,b<0", transforms::solve_abc(s, -1, 0.7)},
    };
    std::string triple_names;
    for (const auto& [name, p] : abc_triples) triple_names += (triple_names.empty() ? "" : ", ") + name;

    run.measure({{"abc_residual " + tag, "abc_residual", "8"}}, [&] {
      std::vector<double> res;
      for (const auto& [name, p] : abc_triples) res.push_back(transforms::check_abc(p, s).max_abs());
      return std::vector<Measurement>{{max_of(res), "triples: " + triple_names, res}};
    });

    run.measure({{"weight_equality " + tag, "weight_equality", "8"}}, [&] {
      const auto zs = disk_points(cfg.seed, kWeightPoints, 1000, 1.5);
      std::vector<double> res;
      for (const auto& [name, p] : abc_triples) {
        double worst = 0.0;
        for (const cplx z : zs) {
          worst = std::max(worst, std::abs(spaces::weight_exponent(spaces::PhiWeight{p}, z) -
                                           spaces::weight_exponent(xs, z)));
        }
        res.push_back(worst);
      }
      return std::vector<Measurement>{{max_of(res), "max |-2 Phi(z) - E_s(z)| at 1000 points; " + triple_names, res}};
    });

    run.measure({{"phi_projection " + tag, "phi_projection", "8"}}, [&] {
      const auto inputs = random_inputs(cfg.seed, kProjectionInputs, 20, 0.0);
      const auto zs = disk_points(cfg.seed, kProjectionPoints, 20, 1.5);
      std::vector<double> res;
      for (const auto& name : {"g1", "g2", "t=0.7"}) {
        const auto it = std::find_if(abc_triples.begin(), abc_triples.end(), [&](const auto& t) { return t.first == name; });
        const PhaseParams& p = it->second;
        const spaces::WeightSpec phi_spec = spaces::PhiWeight{p};
        const auto kernel = spaces::phi_projection_kernel_function(p);
        const QuadraticDecay phi_decay = hermite::kPsiDecay + spaces::phi_projection_kernel_decay(p);
        double worst = 0.0;
        for (std::size_t k = 0; k < inputs.size(); ++k) {
          const ComplexFunction F = inputs[k];
          const cplx a = spaces::apply_kernel(kernel, phi_spec, F, zs[k], phi_decay, cfg.nodes);
          const cplx b = spaces::apply_kernel(ks, xs, F, zs[k], apply_decay, cfg.nodes);
          worst = std::max(worst, std::abs(a - b));
        }
        res.push_back(worst);
      }
      return std::vector<Measurement>{
          {max_of(res), "C_Phi e^{2 Psi} over e^{-2 Phi} vs K_s over X_s, 20 random inputs; triples g1, g2, t=0.7", res}};
    });

    run.measure({{"idempotence " + tag, "idempotence", "8"}}, [&] {
      const PhaseParams p = transforms::g1_triple(s);
      const spaces::WeightSpec spec = spaces::PhiWeight{p};
      const auto kernel = spaces::phi_projection_kernel_function(p);
      // conj(z) e^{-conj(z)^2/2}: not holomorphic
      const ComplexFunction F = [](cplx z) {
        const cplx zb = std::conj(z);
        return ExpScaled::from_exponent(-zb * zb / 2.0, zb);
      };
      const int m = std::min(cfg.nodes, 61);
      const quadrature::PlanarGrid grid(
          m, quadrature::envelope_for(spec, QuadraticDecay::of_conj_gaussian(-0.5) + spaces::phi_projection_kernel_decay(p)));
      const auto f_samples = spaces::sample_on_grid(F, grid);
      std::vector<ExpScaled> pf_samples(grid.size());
      const std::size_t ny = grid.rule_y->nodes.size();
      for (std::size_t i = 0; i < grid.rule_x->nodes.size(); ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
          pf_samples[i * ny + j] = spaces::apply_kernel_sampled(kernel, spec, f_samples, grid, grid.point(i, j));
        }
      }
      std::vector<double> res;
      double size = 0.0;
      double moved = 0.0;
      for (const cplx z : disk_points(cfg.seed, kIdempotencePoints, 9, 1.5)) {
        const cplx once = spaces::apply_kernel_sampled(kernel, spec, f_samples, grid, z);
        const cplx twice = spaces::apply_kernel_sampled(kernel, spec, pf_samples, grid, z);
        res.push_back(std::abs(twice - once));
        size = std::max(size, std::abs(once));
        moved = std::max(moved, std::abs(once - F(z).value()));
      }
      return std::vector<Measurement>{{max_of(res),
                                       "|P P F - P F| for F = conj(z) e^{-conj(z)^2/2}, P the g1 projection, " +
                                           std::to_string(m) + "^2 grid; max |P F| = " + sci(size) + ", max |P F - F| = " + sci(moved),
                                       res}};
    });
  }
  return run.finish();
}

VerificationReport suite_ellipse(const SuiteConfig& cfg) {
  SuiteRun run("ellipse",
               "orthogonality of the elliptic Hermite system in H_B; elliptic weight identity; monomial basis of H_B "
               "and unitarity of B",
               cfg);
  for (const auto& [alpha, beta] : cfg.effective_ellipses()) {
    const std::string tag = pair_label(alpha, beta);
    const auto p = hermite::ellipse_params(alpha, beta);
    const double d = 1.0 + alpha * alpha + beta * beta;

    run.measure({{"weight_identity " + tag, "weight_identity", "6"}}, [&] {
      double worst = 0.0;
      for (const cplx z : disk_points(cfg.seed, kEllipseWeightPoints, 1000, 1.5)) {
        const double lhs = std::exp((p.mu * z * z).real() / 2.0 - std::norm(z) / 2.0);
        const double rhs = std::exp(-std::norm(hermite::zeta_map(p, z)) / d);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      return std::vector<Measurement>{{worst, "|Psi_0|^2 e^{-|z|^2/2} vs exp(-|zeta|^2/(1+a^2+b^2)) at 1000 points", {}}};
    });

    run.measure({{"ellipse_gram " + tag, "ellipse_gram", "6"}, {"ellipse_norm0 " + tag, "ellipse_norm0", ""}}, [&] {
      const auto gram = spaces::gram_matrix([&](int n) { return hermite::psi_n_ellipse_function(n, p); }, 7,
                                            spaces::StandardBargmannWeight{}, QuadraticDecay::of_gaussian(p.mu / 2.0),
                                            cfg.nodes);
      std::string norms;
      for (int n = 0; n < 7; ++n) norms += (n ? ", " : "") + fixed(gram.at(n, n).real(), 10);
      const double norm0 = std::numbers::pi * d / alpha;
      return std::vector<Measurement>{
          {gram.max_relative_offdiag, "|G(m,n)| / sqrt(G(m,m) G(n,n)), n <= 6; norms^2: " + norms, {}},
          {std::abs(gram.at(0, 0) - norm0) / norm0,
           "||Psi_0||^2 = " + fixed(gram.at(0, 0).real()) + " vs pi (1+a^2+b^2)/a = " + fixed(norm0),
           {}}};
    });

    run.measure({{"ellipse_rodrigues " + tag, "ellipse_rodrigues", "6"}}, [&] {
      const auto zs = disk_points(cfg.seed, kEllipseOraclePoints, 9, 1.0);
      const int n_top = std::min(cfg.n_max, hermite::kMaxOracleDegree);
      std::vector<double> per_n;
      for (int n = 0; n <= n_top; ++n) {
        std::vector<cplx> closed, oracle;
        for (const cplx z : zs) {
          closed.push_back(hermite::psi_n_ellipse(n, p, z) / hermite::psi0_ellipse(p, z));
          oracle.push_back(hermite::rodrigues_oracle(n, p.lambda, z));
        }
        per_n.push_back(scaled_max_error(closed, oracle));
      }
      return std::vector<Measurement>{
          {max_of(per_n), "closed form vs Cauchy-integral oracle, n = 0.." + std::to_string(n_top), per_n}};
    });

    if (beta == 0.0) {
      run.measure({{"mu_lambda " + tag, "mu_lambda", ""}}, [&] {
        const double s = alpha * alpha;
        const double mu = (1.0 - s) / (1.0 + s);
        const double lambda = 2.0 * s / (1.0 - s * s);
        const double r = std::max(std::abs(p.mu - mu), std::abs(p.lambda - lambda));
        return std::vector<Measurement>{
            {r, "mu = " + fixed(p.mu.real()) + " = (1-s)/(1+s), lambda = " + fixed(p.lambda.real()) + " = 2s/(1-s^2)", {}}};
      });
    }
  }

  run.measure({{"monomial_gram", "monomial_gram", "4"}}, [&] {
    const auto gram = spaces::gram_matrix([](int n) { return transforms::bargmann_monomial_function(n); }, 9,
                                          spaces::StandardBargmannWeight{}, QuadraticDecay{}, cfg.nodes);
    return std::vector<Measurement>{{gram.max_identity_deviation, "z^n / sqrt(pi 2^{n+1} n!), n <= 8", {}}};
  });

  run.measure({{"bargmann_unitarity", "bargmann_unitarity", "5"}}, [&] {
    const auto gram = spaces::gram_matrix(
        [&](int n) -> ComplexFunction {
          return [n, &cfg](cplx z) {
            return transforms::t_transform_scaled(PhaseParams::standard(), transforms::hermite_function_handle(n), z, 0.5,
                                                  cfg.nodes);
          };
        },
        7, spaces::StandardBargmannWeight{}, QuadraticDecay{}, cfg.nodes);
    return std::vector<Measurement>{{gram.max_identity_deviation, "<B h_m, B h_n> in H_B, m, n <= 6", {}}};
  });

  run.measure({{"bargmann_pointwise", "bargmann_pointwise", "5"}}, [&] {
    const auto zs = disk_points(cfg.seed, kBargmannPoints, 9, 1.5);
    std::vector<double> per_n;
    for (int n = 0; n <= 6; ++n) {
      double worst = 0.0;
      for (const cplx z : zs) {
        worst = std::max(worst, std::abs(transforms::bargmann(transforms::hermite_function_handle(n), z, 0.5, cfg.nodes) -
                                         transforms::bargmann_monomial(n, z)));
      }
      per_n.push_back(worst);
    }
    return std::vector<Measurement>{{max_of(per_n), "|B h_n - z^n/sqrt(pi 2^{n+1} n!)| at 9 points", per_n}};
  });

  return run.finish();
}

VerificationReport suite_isomorphism(const SuiteConfig& cfg) {
  SuiteRun run("isomorphism",
               "isomorphism X_s -> H_B and its inverse; Hermite correspondence with the (sqrt s, 0) ellipse; B T* as an "
               "isomorphism X_s -> H_B",
               cfg);
  const auto points = disk_points(cfg.seed, kIsoPoints, 9, 1.5);
  for (const double sv : cfg.s_values) {
    const SParam s(sv);
    const std::string tag = s_label(sv);
    const double gamma = (1.0 + sv * sv) / (4.0 * (1.0 - sv * sv));

    const auto iso_gram = [&](transforms::IsoScaling scaling) {
      const double k = std::sqrt(sv / (1.0 - sv * sv));
      const double arg = scaling == transforms::IsoScaling::square_root ? k : k * k;
      // |psi(arg z)|^2 |e^{gamma z^2}|^2
      const QuadraticDecay decay{arg * arg - 2.0 * gamma, -arg * arg + 2.0 * gamma};
      return spaces::gram_matrix(
          [&](int n) { return transforms::iso_x_to_b(s, hermite::psi_s_function(n, s), scaling); }, 9,
          spaces::StandardBargmannWeight{}, decay, cfg.nodes);
    };

    run.measure({{"iso_isometry " + tag, "iso_isometry", "7"}}, [&] {
      const auto gram = iso_gram(transforms::IsoScaling::square_root);
      return std::vector<Measurement>{
          {gram.max_identity_deviation, "Gram in H_B of the images of psi_0..psi_8, argument scaled by sqrt(s/(1-s^2))", {}}};
    });

    run.measure({{"iso_unrooted_scaling " + tag, "iso_unrooted_scaling", "7", CaseKind::must_exceed}}, [&] {
      const auto gram = iso_gram(transforms::IsoScaling::unrooted);
      return std::vector<Measurement>{{gram.max_identity_deviation,
                                       "argument scaled by s/(1-s^2) instead: expected not to be an isometry", {}}};
    });

    run.measure({{"iso_round_trip " + tag, "iso_round_trip", "7"}}, [&] {
      std::vector<double> res;
      double worst = 0.0;
      for (int n = 0; n <= 8; ++n) {
        const auto back = transforms::iso_b_to_x(s, transforms::iso_x_to_b(s, hermite::psi_s_function(n, s)));
        for (const cplx z : points) {
          const cplx want = hermite::psi_s(n, s, z);
          worst = std::max(worst, std::abs(back(z).value() - want) / std::max(1.0, std::abs(want)));
        }
      }
      res.push_back(worst);
      worst = 0.0;
      for (const auto& f : random_inputs(cfg.seed, kIsoInputs, 20, 0.2)) {
        const auto back = transforms::iso_x_to_b(s, transforms::iso_b_to_x(s, f));
        for (const cplx z : points) {
          const cplx want = f(z).value();
          worst = std::max(worst, std::abs(back(z).value() - want) / std::max(1.0, std::abs(want)));
        }
      }
      res.push_back(worst);
      return std::vector<Measurement>{
          {max_of(res), "X_s -> H_B -> X_s on psi_0..psi_8, H_B -> X_s -> H_B on 20 random Gaussian polynomials", res}};
    });

    run.measure({{"hermite_correspondence " + tag, "hermite_correspondence", "7"}}, [&] {
      const auto zs = disk_points(cfg.seed, kCorrespondencePoints, 1000, 1.5);
      const int n_top = std::min(cfg.n_max, hermite::kMaxOracleDegree);
      std::vector<double> per_n;
      for (int n = 0; n <= n_top; ++n) {
        double worst = 0.0;
        for (const cplx z : zs) worst = std::max(worst, transforms::hermite_correspondence_residual(s, n, z));
        per_n.push_back(worst);
      }
      return std::vector<Measurement>{{max_of(per_n), "n = 0.." + std::to_string(n_top) + " at 1000 points", per_n}};
    });

    run.measure({{"zero_input iso " + tag, "zero_input", ""}}, [&] {
      const auto f = transforms::iso_x_to_b(s, zero_function());
      const auto g = transforms::iso_b_to_x(s, zero_function());
      return std::vector<Measurement>{{std::abs(f({0.4, 0.1}).value()) + std::abs(g({0.4, 0.1}).value()), "", {}}};
    });

    run.measure({{"bt_star_gram " + tag, "bt_star_gram", "9"}}, [&] {
      const PhaseParams p = transforms::g1_triple(s);
      std::vector<std::shared_ptr<const transforms::BTStarComposition>> comps;
      for (int n = 0; n <= 4; ++n) comps.push_back(composition("g1", p, s, n, cfg.nodes));
      // B is only trusted where its outer rule reaches; see CompositionOptions.
      const quadrature::PlanarGrid grid(cfg.nodes, quadrature::GaussianEnvelope(0.5, 1.0));
      const auto gram = spaces::gram_matrix_on_grid([&](int n) { return comps[n]->as_function(); }, 5,
                                                    spaces::StandardBargmannWeight{}, grid);
      return std::vector<Measurement>{
          {gram.max_identity_deviation, "Gram in H_B of B T* psi_n, n <= 4, triple g1; grid envelope (0.5, 1)", {}}};
    });

    run.measure({{"ks_via_isomorphism " + tag, "ks_via_isomorphism", ""}}, [&] {
      // Pull e^{z conj(zeta)/2}/(2 pi) back through the isomorphism onto X_s.
      const double k2 = sv / (1.0 - sv * sv);
      const double q = (1.0 + sv * sv) / (4.0 * sv);
      const auto zetas = disk_points(cfg.seed, kKernelPairs, 9, 1.5);
      std::vector<double> errs;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const cplx z = points[i];
        const cplx zb = std::conj(zetas[i]);
        const cplx pulled = spaces::projection_kernel_B(z / std::sqrt(k2), zetas[i] / std::sqrt(k2)) / k2 *
                            std::exp(-q * (z * z + zb * zb));
        const cplx direct = spaces::k_s_kernel(s, z, zetas[i], cfg.ks_prefactor_scale);
        errs.push_back(std::abs(pulled - direct) / std::abs(direct));
      }
      return std::vector<Measurement>{{max_of(errs), "kernel of H_B carried to X_s vs K_s at 9 pairs, relative", errs}};
    });

    run.measure({{"ks_doubled_exponent " + tag, "ks_doubled_exponent", "", CaseKind::must_exceed}}, [&] {
      // K_s with (1-s^2)/s in place of (1-s^2)/(2s) in front of z conj(zeta)
      const double pref = (1.0 - sv * sv) / (2.0 * std::numbers::pi * sv);
      const double q = (1.0 + sv * sv) / (4.0 * sv);
      const KernelFunction doubled = [=](cplx z, cplx zeta) {
        const cplx zb = std::conj(zeta);
        return ExpScaled::from_exponent((1.0 - sv * sv) / sv * z * zb - q * (z * z + zb * zb), pref);
      };
      std::vector<double> per_n;
      for (int n = 0; n <= 2; ++n) {
        std::vector<cplx> got, want;
        for (const cplx z : points) {
          got.push_back(spaces::apply_kernel(doubled, spaces::XsWeight{s}, hermite::psi_s_function(n, s), z,
                                             hermite::kPsiDecay + spaces::k_s_kernel_decay(s), cfg.nodes));
          want.push_back(hermite::psi_s(n, s, z));
        }
        per_n.push_back(scaled_max_error(got, want));
      }
      return std::vector<Measurement>{
          {max_of(per_n), "kernel with z conj(zeta) coefficient (1-s^2)/s fails to reproduce psi_0..psi_2", per_n}};
    });
  }
  return run.finish();
}

VerificationReport suite_kernels(const SuiteConfig& cfg) {
  SuiteRun run("kernels", "explicit kernels G1 and G2 of B T*; sign of b; normalization C_Phi of the projection", cfg);
  const auto points = disk_points(cfg.seed, kKernelPoints, 9, 1.0);
  for (const double sv : cfg.s_values) {
    const SParam s(sv);
    const std::string tag = s_label(sv);
    const spaces::WeightSpec xs = spaces::XsWeight{s};

    const auto nested_vs_kernel = [&](const std::string& label, const PhaseParams& p, const KernelFunction& kernel,
                                      const QuadraticDecay& kernel_decay) {
      std::vector<double> per_n;
      for (int n = 0; n <= 4; ++n) {
        const auto comp = composition(label, p, s, n, cfg.nodes);
        double worst = 0.0;
        for (const cplx z : points) {
          const cplx single =
              spaces::apply_kernel(kernel, xs, hermite::psi_s_function(n, s), z, hermite::kPsiDecay + kernel_decay, cfg.nodes);
          worst = std::max(worst, std::abs(single - (*comp)(z)));
        }
        per_n.push_back(worst);
      }
      return per_n;
    };

    run.measure({{"g1_nested " + tag, "g1_nested", "10"}}, [&] {
      const auto r = nested_vs_kernel("g1", transforms::g1_triple(s), transforms::g1_kernel_function(s),
                                      transforms::g1_kernel_decay(s));
      return std::vector<Measurement>{{max_of(r), "|G1 psi_n - B T* psi_n| at 9 points, residuals by n = 0..4", r}};
    });

    run.measure({{"g2_nested " + tag, "g2_nested", "10"}}, [&] {
      const auto r = nested_vs_kernel("g2", transforms::g2_triple(s), transforms::g2_kernel_function(s),
                                      transforms::g2_kernel_decay(s));
      return std::vector<Measurement>{{max_of(r), "|G2 psi_n - B T* psi_n| at 9 points, residuals by n = 0..4", r}};
    });

    run.measure({{"g1_flipped_sign " + tag, "g1_flipped_sign", "10", CaseKind::must_exceed}}, [&] {
      const auto r = nested_vs_kernel("g1 b=+i", transforms::solve_abc(s, 1, 0.0), transforms::g1_kernel_function(s),
                                      transforms::g1_kernel_decay(s));
      return std::vector<Measurement>{
          {max_of(r), "b = +i sqrt(1-s^2) against G1; even n agree because the sign only flips odd parts", r}};
    });

    run.measure({{"g_prefactor " + tag, "g_prefactor", ""}}, [&] {
      const double expected = std::sqrt(1.0 - sv) / (std::sqrt(2.0) * std::numbers::pi * std::pow(sv, 0.25));
      const cplx g1 = transforms::g1_kernel(s, 0.0, 0.0);
      const cplx g2 = transforms::g2_kernel(s, 0.0, 0.0);
      return std::vector<Measurement>{{std::max(std::abs(g1 - expected), std::abs(g2 - expected)),
                                       "G1(0,0) = G2(0,0) = " + fixed(g1.real()) + ", sqrt(1-s)/(sqrt 2 pi s^{1/4}) = " +
                                           fixed(expected),
                                       {}}};
    });

    run.measure({{"c_phi_squared " + tag, "c_phi_squared", ""},
                 {"c_phi_linear " + tag, "c_phi_linear", "", CaseKind::must_exceed},
                 {"c_phi_linear_factor " + tag, "c_phi_linear_factor", ""}},
                [&] {
                  const PhaseParams p = transforms::g1_triple(s);
                  const spaces::WeightSpec spec = spaces::PhiWeight{p};
                  const QuadraticDecay decay = hermite::kPsiDecay + spaces::phi_projection_kernel_decay(p);
                  const auto psi0 = hermite::psi_s_function(0, s);
                  std::vector<cplx> sq, lin, want;
                  for (const cplx z : points) {
                    sq.push_back(spaces::apply_kernel(
                        spaces::phi_projection_kernel_function(p, spaces::CPhiConvention::squared_b), spec, psi0, z,
                        decay, cfg.nodes));
                    lin.push_back(spaces::apply_kernel(
                        spaces::phi_projection_kernel_function(p, spaces::CPhiConvention::linear_b), spec, psi0, z,
                        decay, cfg.nodes));
                    want.push_back(hermite::psi_s(0, s, z));
                  }
                  const double root = std::sqrt(1.0 - sv * sv);
                  double factor = 0.0;
                  for (std::size_t i = 0; i < want.size(); ++i) {
                    factor = std::max(factor, std::abs(lin[i] / want[i] * root - 1.0));
                  }
                  const cplx ratio = lin[0] / want[0];
                  return std::vector<Measurement>{
                      {scaled_max_error(sq, want), "C_Phi = |b|^2/(2 pi Im c) reproduces psi_0", {}},
                      {scaled_max_error(lin, want), "C_Phi = |b|/(2 pi Im c) does not", {}},
                      {factor,
                       "it returns psi_0 / sqrt(1-s^2): ratio " + fixed(ratio.real()) + " vs " + fixed(1.0 / root),
                       {}}};
                });

    run.measure({{"zero_input kernels " + tag, "zero_input", ""}}, [&] {
      const cplx got = spaces::apply_kernel(transforms::g1_kernel_function(s), xs, zero_function(), {0.2, -0.3},
                                            hermite::kPsiDecay + transforms::g1_kernel_decay(s), cfg.nodes);
      return std::vector<Measurement>{{std::abs(got), "G1 applied to 0", {}}};
    });
  }
  return run.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthonormal", "reproduce", "ellipse", "isomorphism", "kernels"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "orthonormal") return suite_orthonormal(cfg);
  if (name == "reproduce") return suite_reproduce(cfg);
  if (name == "ellipse") return suite_ellipse(cfg);
  if (name == "isomorphism") return suite_isomorphism(cfg);
  if (name == "kernels") return suite_kernels(cfg);
  throw ConfigError("unknown suite '" + name + "'");
}

RunResult run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names) {
  cfg.validate();
  RunResult result;
  for (const auto& name : names.empty() ? suite_names() : names) result.reports.push_back(run_suite(name, cfg));
  result.exit_code = exit_code_for(result.reports);
  return result;
}

}  // namespace holo::verify
