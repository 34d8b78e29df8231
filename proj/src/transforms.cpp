#include "holo/transforms.hpp"

#include <cmath>
#include <numbers>

#include "holo/errors.hpp"
#include "holo/hermite.hpp"
#include "holo/weight_spec.hpp"

namespace holo::transforms {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx finite_or_throw(const ExpScaled& v, const char* where) {
  const cplx out = v.value();
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
    throw NumericalError(std::string(where) + ": result overflows double precision");
  }
  return out;
}

double bargmann_constant() { return std::pow(2.0, -0.5) * std::pow(std::numbers::pi, -0.75); }

}  // namespace

cplx phase(const PhaseParams& p, cplx z, double x) {
  return p.a() / 2.0 * z * z + p.b() * z * x + p.c() / 2.0 * x * x;
}

ExpScaled t_transform_scaled(const PhaseParams& p, const LineFunction& f, cplx z, double f_decay, int nodes) {
  if (!(f_decay >= 0.0)) throw ParameterError("t_transform: f_decay must be >= 0");
  // |e^{i phi}| = exp(-(Im c / 2) x^2 - Im(b z) x - Im(a z^2) / 2)
  const double decay = p.c().imag() / 2.0 + f_decay;
  const double center = -(p.b() * z).imag() / (2.0 * decay);
  const auto integrand = [&](double x) { return ExpScaled::from_exponent(kI * phase(p, z, x)) * f(x); };
  ExpScaled out = quadrature::integrate_line_scaled(integrand, *quadrature::cached_rule(nodes), std::sqrt(decay), center);
  out.mantissa *= p.c_phi();
  return out;
}

cplx t_transform(const PhaseParams& p, const LineFunction& f, cplx z, double f_decay, int nodes) {
  return finite_or_throw(t_transform_scaled(p, f, z, f_decay, nodes), "t_transform");
}

ExpScaled t_adjoint_scaled(const PhaseParams& p, const ComplexFunction& phi, double x, const QuadraticDecay& phi_decay,
                           int nodes) {
  const spaces::WeightSpec spec = spaces::PhiWeight{p};
  // |e^{-i conj(phi(z, x))}| = |e^{i a z^2 / 2}| |e^{i b x z}| e^{-(Im c) x^2 / 2}
  const QuadraticDecay decay = spaces::weight_decay(spec) + QuadraticDecay::of_gaussian(kI * p.a() / 2.0) + phi_decay;
  const cplx w = kI * p.b() * x;
  const LinearTilt tilt{w.real(), -w.imag()};
  const quadrature::PlanarGrid grid(nodes, quadrature::envelope_from_decay(decay, tilt));
  // 2 Phi is the real quadratic form with the coefficients of weight_decay
  const QuadraticDecay two_phi = spaces::weight_decay(spec);
  const auto integrand = [&](cplx z) {
    const double re = z.real();
    const double im = z.imag();
    ExpScaled v = ExpScaled::from_exponent(-kI * std::conj(phase(p, z, x))) * phi(z);
    v.log_scale -= two_phi.xx * re * re + two_phi.xy * re * im + two_phi.yy * im * im;
    return v;
  };
  ExpScaled out = quadrature::integrate_plane_scaled(integrand, grid);
  out.mantissa *= p.c_phi();
  return out;
}

cplx t_adjoint(const PhaseParams& p, const ComplexFunction& phi, double x, const QuadraticDecay& phi_decay, int nodes) {
  return finite_or_throw(t_adjoint_scaled(p, phi, x, phi_decay, nodes), "t_adjoint");
}

cplx bargmann(const LineFunction& f, cplx z, double f_decay, int nodes) {
  return t_transform(PhaseParams::standard(), f, z, f_decay, nodes);
}

cplx bargmann_adjoint(const ComplexFunction& phi, double x, const QuadraticDecay& phi_decay, int nodes) {
  return t_adjoint(PhaseParams::standard(), phi, x, phi_decay, nodes);
}

namespace {

// orthonormal Hermite polynomial for e^{-x^2}
double orthonormal_hermite(int n, double x) {
  double p = std::pow(std::numbers::pi, -0.25);
  double prev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * prev;
    prev = p;
    p = next;
  }
  return p;
}

}  // namespace

double hermite_function(int n, double x) {
  if (n < 0 || n > hermite::kMaxHermiteDegree) throw ParameterError("hermite_function: degree out of range");
  return orthonormal_hermite(n, x) * std::exp(-x * x / 2.0);
}

LineFunction hermite_function_handle(int n) {
  if (n < 0 || n > hermite::kMaxHermiteDegree) throw ParameterError("hermite_function: degree out of range");
  return [n](double x) { return ExpScaled{orthonormal_hermite(n, x), -x * x / 2.0}; };
}

cplx bargmann_monomial(int n, cplx z) {
  if (n < 0 || n > hermite::kMaxHermiteDegree) throw ParameterError("bargmann_monomial: degree out of range");
  const double log_norm = 0.5 * (std::log(std::numbers::pi) + (n + 1) * std::log(2.0) + std::lgamma(n + 1.0));
  return std::pow(z, n) * std::exp(-log_norm);
}

ComplexFunction bargmann_monomial_function(int n) {
  bargmann_monomial(n, 0.0);  // validates n
  return [n](cplx z) { return ExpScaled{bargmann_monomial(n, z)}; };
}

double AbcResidual::max_abs() const { return std::max(std::abs(r1), std::abs(r2)); }

AbcResidual check_abc(const PhaseParams& p, SParam s) {
  const double sv = s.value();
  const double im_c = p.c().imag();
  AbcResidual r{};
  r.r1 = (1.0 - sv * sv) / (4.0 * sv) - std::norm(p.b()) / (4.0 * im_c);
  r.r2 = (1.0 + sv * sv) / (4.0 * sv) - p.b() * p.b() / (4.0 * im_c) - p.a() / (2.0 * kI);
  return r;
}

PhaseParams solve_abc(SParam s, int im_b_sign, double re_c) {
  if (im_b_sign != 1 && im_b_sign != -1) throw ParameterError("solve_abc: im_b_sign must be +1 or -1");
  const double sv = s.value();
  return {kI / sv, static_cast<double>(im_b_sign) * kI * std::sqrt(1.0 - sv * sv), cplx(re_c, sv)};
}

PhaseParams g1_triple(SParam s) { return solve_abc(s, -1, 0.0); }

PhaseParams g2_triple(SParam s) {
  const double sv = s.value();
  return {kI * sv, std::sqrt(1.0 - sv * sv), kI * sv};
}

namespace {

double iso_factor(SParam s) { return std::sqrt(s.value() / (1.0 - s.value() * s.value())); }

double iso_argument_factor(SParam s, IsoScaling scaling) {
  const double k = iso_factor(s);
  return scaling == IsoScaling::square_root ? k : k * k;
}

}  // namespace

ComplexFunction iso_x_to_b(SParam s, ComplexFunction phi, IsoScaling scaling) {
  const double sv = s.value();
  const double k = iso_factor(s);
  const double arg = iso_argument_factor(s, scaling);
  const double gamma = (1.0 + sv * sv) / (4.0 * (1.0 - sv * sv));
  return [phi = std::move(phi), k, arg, gamma](cplx z) { return times_exp(phi(arg * z), gamma * z * z) * k; };
}

ComplexFunction iso_b_to_x(SParam s, ComplexFunction psi, IsoScaling scaling) {
  const double sv = s.value();
  const double k = iso_factor(s);
  const double arg = iso_argument_factor(s, scaling);
  const double gamma = (1.0 + sv * sv) / (4.0 * sv);
  return [psi = std::move(psi), k, arg, gamma](cplx z) { return times_exp(psi(z / arg), -gamma * z * z) * (1.0 / k); };
}

double hermite_correspondence_residual(SParam s, int n, cplx z) {
  if (n < 0 || n > hermite::kMaxOracleDegree) throw ParameterError("hermite_correspondence_residual: n must lie in [0, 20]");
  const double sv = s.value();
  const double r = std::sqrt((1.0 - sv * sv) / sv);
  const ExpScaled lhs =
      times_exp(hermite::psi_s_scaled(n, s, z), -(1.0 - sv * sv) / (4.0 * sv) * std::norm(z) + (1.0 + sv * sv) / (4.0 * sv) * z * z);
  const auto ellipse = hermite::ellipse_params(std::sqrt(sv), 0.0);
  const cplx w = r * z;
  const ExpScaled rhs = times_exp(hermite::psi_n_ellipse_scaled(n, ellipse, w), -std::norm(w) / 4.0) *
                        (std::pow(-r, n) * std::exp(-0.5 * hermite::log_b_nn(n, s)));
  return std::abs((lhs - rhs).value());
}

namespace {

double g_prefactor(SParam s) {
  const double sv = s.value();
  return std::sqrt(1.0 - sv) / (std::sqrt(2.0) * std::numbers::pi * std::pow(sv, 0.25));
}

}  // namespace

ExpScaled g1_kernel_scaled(SParam s, cplx z, cplx zeta) {
  const double sv = s.value();
  const cplx zb = std::conj(zeta);
  const cplx e = std::sqrt((1.0 - sv) / (1.0 + sv)) * z * zb + (1.0 - sv) / (4.0 * (1.0 + sv)) * z * z -
                 (1.0 - sv + sv * sv) / (2.0 * sv) * zb * zb;
  return ExpScaled::from_exponent(e, g_prefactor(s));
}

cplx g1_kernel(SParam s, cplx z, cplx zeta) { return finite_or_throw(g1_kernel_scaled(s, z, zeta), "g1_kernel"); }

KernelFunction g1_kernel_function(SParam s) {
  return [s](cplx z, cplx zeta) { return g1_kernel_scaled(s, z, zeta); };
}

QuadraticDecay g1_kernel_decay(SParam s) {
  const double sv = s.value();
  return QuadraticDecay::of_conj_gaussian(-(1.0 - sv + sv * sv) / (2.0 * sv));
}

ExpScaled g2_kernel_scaled(SParam s, cplx z, cplx zeta) {
  const double sv = s.value();
  const cplx zb = std::conj(zeta);
  const cplx e = -kI * std::sqrt((1.0 - sv) / (1.0 + sv)) * z * zb + (1.0 - sv) / (4.0 * (1.0 + sv)) * z * z - zb * zb / 2.0;
  return ExpScaled::from_exponent(e, g_prefactor(s));
}

cplx g2_kernel(SParam s, cplx z, cplx zeta) { return finite_or_throw(g2_kernel_scaled(s, z, zeta), "g2_kernel"); }

KernelFunction g2_kernel_function(SParam s) {
  return [s](cplx z, cplx zeta) { return g2_kernel_scaled(s, z, zeta); };
}

QuadraticDecay g2_kernel_decay(SParam) { return QuadraticDecay::of_conj_gaussian(-0.5); }

BTStarComposition::BTStarComposition(const PhaseParams& p, const ComplexFunction& phi, const QuadraticDecay& phi_decay,
                                     CompositionOptions options)
    : outer_(quadrature::cached_rule(options.outer_nodes)),
      outer_scale_(options.outer_scale),
      cost_warning_(options.inner_nodes > 301) {
  if (!(outer_scale_ > 0.0)) throw ParameterError("BTStarComposition: outer_scale must be positive");
  points_.reserve(outer_->nodes.size());
  samples_.reserve(outer_->nodes.size());
  for (const double t : outer_->nodes) {
    const double x = t / outer_scale_;
    points_.push_back(x);
    samples_.push_back(t_adjoint_scaled(p, phi, x, phi_decay, options.inner_nodes));
  }
}

ExpScaled BTStarComposition::evaluate_scaled(cplx z) const {
  const std::size_t n = points_.size();
  std::vector<cplx> mantissas(n);
  std::vector<double> exponents(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = points_[i];
    const ExpScaled term = times_exp(samples_[i], -z * z / 4.0 + z * x - x * x / 2.0);
    mantissas[i] = outer_->scaled_weights[i] * term.mantissa;
    exponents[i] = term.log_scale;
  }
  ExpScaled out = quadrature::reduce_scaled(mantissas, exponents);
  out.mantissa *= bargmann_constant() / outer_scale_;
  return out;
}

cplx BTStarComposition::operator()(cplx z) const { return finite_or_throw(evaluate_scaled(z), "compose_b_tstar"); }

ComplexFunction BTStarComposition::as_function() const {
  return [self = *this](cplx z) { return self.evaluate_scaled(z); };
}

cplx compose_b_tstar(const PhaseParams& p, const ComplexFunction& phi, cplx z, const QuadraticDecay& phi_decay,
                     CompositionOptions options) {
  return BTStarComposition(p, phi, phi_decay, options)(z);
}

}  // namespace holo::transforms
