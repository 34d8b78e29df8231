#include "holo/hermite.hpp"

#include <cmath>
#include <numbers>

#include "holo/errors.hpp"

namespace holo::hermite {

namespace {

void require_degree(int n, int max, const char* what) {
  if (n < 0 || n > max) throw ParameterError(std::string(what) + ": degree out of range");
}

void require_finite(cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericalError(std::string(what) + ": overflow");
  }
}

// Degrees up to this evaluate H_n and b_nn^{-1/2} separately.
constexpr int kDirectLimit = 30;

}  // namespace

cplx hermite_poly(int n, cplx z) {
  require_degree(n, kMaxHermiteDegree, "hermite_poly");
  if (n == 0) return 1.0;
  cplx h_prev = 1.0;
  cplx h = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const cplx next = 2.0 * z * h - 2.0 * k * h_prev;
    h_prev = h;
    h = next;
  }
  require_finite(h, "hermite_poly");
  return h;
}

double log_b_nn(int n, SParam s) {
  const double sv = s.value();
  return std::log(std::numbers::pi * std::sqrt(sv) / (1.0 - sv)) + n * std::log(2.0 * (1.0 + sv) / (1.0 - sv)) +
         std::lgamma(n + 1.0);
}

double b_nn(int n, SParam s) { return std::exp(log_b_nn(n, s)); }

HermiteNormalization hermite_normalization(int n, SParam s) { return {n, s, b_nn(n, s)}; }

std::vector<cplx> normalized_hermite_all(int n_max, SParam s, cplx z) {
  require_degree(n_max, kMaxHermiteDegree, "normalized_hermite_all");
  const double sv = s.value();
  const double rho = 2.0 * (1.0 + sv) / (1.0 - sv);  // b_{k+1,k+1} / b_kk = rho (k + 1)
  std::vector<cplx> p(n_max + 1);
  p[0] = std::exp(-0.5 * log_b_nn(0, s));
  if (n_max >= 1) p[1] = 2.0 * z * p[0] / std::sqrt(rho);
  for (int k = 1; k < n_max; ++k) {
    p[k + 1] = 2.0 * z * p[k] / std::sqrt(rho * (k + 1)) - 2.0 * k * p[k - 1] / (rho * std::sqrt(k * (k + 1.0)));
  }
  require_finite(p[n_max], "normalized_hermite_all");
  return p;
}

namespace {

cplx normalized_hermite(int n, SParam s, cplx z) {
  if (n <= kDirectLimit) return hermite_poly(n, z) * std::exp(-0.5 * log_b_nn(n, s));
  return normalized_hermite_all(n, s, z)[n];
}

}  // namespace

ExpScaled psi_s_scaled(int n, SParam s, cplx z) {
  require_degree(n, kMaxHermiteDegree, "psi_s");
  return ExpScaled::from_exponent(-0.5 * z * z, normalized_hermite(n, s, z));
}

cplx psi_s(int n, SParam s, cplx z) {
  const cplx v = psi_s_scaled(n, s, z).value();
  require_finite(v, "psi_s");
  return v;
}

ComplexFunction psi_s_function(int n, SParam s) {
  require_degree(n, kMaxHermiteDegree, "psi_s");
  if (n > kDirectLimit) return [n, s](cplx z) { return psi_s_scaled(n, s, z); };
  const double norm = std::exp(-0.5 * log_b_nn(n, s));
  return [n, norm](cplx z) { return ExpScaled::from_exponent(-0.5 * z * z, norm * hermite_poly(n, z)); };
}

EllipseParams ellipse_params(double alpha, double beta) {
  if (!(alpha > 0.0) || !std::isfinite(beta)) throw ParameterError("ellipse_params: need alpha > 0, finite beta");
  if (alpha == 1.0 && beta == 0.0) throw ParameterError("ellipse_params: (alpha, beta) = (1, 0) is excluded");
  const double a2 = alpha * alpha;
  const double b2 = beta * beta;
  const double d = 1.0 + a2 + b2;
  EllipseParams p{};
  p.alpha = alpha;
  p.beta = beta;
  p.mu = cplx(1.0 - a2 - b2, 2.0 * beta) / d;
  p.lambda = 2.0 * a2 / (d * cplx(1.0 - a2 - b2, -2.0 * beta));
  p.zeta_c1 = cplx(alpha + 1.0, beta) / 2.0;
  p.zeta_c2 = cplx(alpha - 1.0, beta) / 2.0;
  return p;
}

cplx zeta_map(const EllipseParams& p, cplx z) { return p.zeta_c1 * z + p.zeta_c2 * std::conj(z); }

ExpScaled psi0_ellipse_scaled(const EllipseParams& p, cplx z) { return ExpScaled::from_exponent(p.mu * z * z / 4.0); }

cplx psi0_ellipse(const EllipseParams& p, cplx z) { return std::exp(p.mu * z * z / 4.0); }

ExpScaled psi_n_ellipse_scaled(int n, const EllipseParams& p, cplx z, SqrtBranch branch) {
  require_degree(n, kMaxEllipseDegree, "psi_n_ellipse");
  cplx r = std::sqrt(p.lambda / 2.0);
  if (branch == SqrtBranch::negated) r = -r;
  const cplx factor = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(r, n) * hermite_poly(n, r * z);
  return ExpScaled::from_exponent(p.mu * z * z / 4.0, factor);
}

cplx psi_n_ellipse(int n, const EllipseParams& p, cplx z, SqrtBranch branch) {
  const cplx v = psi_n_ellipse_scaled(n, p, z, branch).value();
  require_finite(v, "psi_n_ellipse");
  return v;
}

ComplexFunction psi_n_ellipse_function(int n, const EllipseParams& p) {
  require_degree(n, kMaxEllipseDegree, "psi_n_ellipse");
  return [n, p](cplx z) { return psi_n_ellipse_scaled(n, p, z); };
}

cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx z, int n, double radius, int points) {
  if (n < 0 || points < 1 || !(radius > 0.0)) throw ParameterError("cauchy_derivative: bad arguments");
  cplx acc{};
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / points;
    const cplx omega = std::polar(1.0, theta);
    acc += f(z + radius * omega) * std::polar(1.0, -n * theta);
  }
  return std::exp(std::lgamma(n + 1.0)) / (points * std::pow(radius, n)) * acc;
}

cplx rodrigues_oracle(int n, cplx lambda, cplx z) {
  require_degree(n, kMaxOracleDegree, "rodrigues_oracle");
  // the ratio e^{-lambda w^2/2} / e^{-lambda z^2/2}, differentiated in w at z
  const auto ratio = [&](cplx w) { return std::exp(-lambda * (w * w - z * z) / 2.0); };
  return cauchy_derivative(ratio, z, n, 1.0, 64 * (n + 1));
}

}  // namespace holo::hermite
