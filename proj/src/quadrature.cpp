#include "holo/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "holo/errors.hpp"

namespace holo::quadrature {

namespace {

constexpr double kRescale = 1e150;
const double kLogRescale = std::log(kRescale);

// Orthonormal Hermite polynomials (weight e^{-x^2}) at x, with a running
// log-scale so that p_n survives x ~ sqrt(2n) for n up to 2000.
struct RecurrenceAt {
  double p_n = 0.0;
  double p_nm1 = 0.0;
  double log_scale = 0.0;
};

RecurrenceAt orthonormal_hermite(int n, double x) {
  double p1 = 1.0 / std::pow(std::numbers::pi, 0.25);
  double p2 = 0.0;
  double log_scale = 0.0;
  for (int j = 0; j < n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = x * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
    if (std::abs(p1) > kRescale) {
      p1 /= kRescale;
      p2 /= kRescale;
      log_scale += kLogRescale;
    }
  }
  return {p1, p2, log_scale};
}

// Newton polish of one root; returns false if it did not settle.
bool newton_polish(int n, double& x) {
  const double sqrt2n = std::sqrt(2.0 * n);
  for (int it = 0; it < 100; ++it) {
    const auto r = orthonormal_hermite(n, x);
    const double dx = r.p_n / (sqrt2n * r.p_nm1);
    x -= dx;
    if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      const auto r2 = orthonormal_hermite(n, x);
      x -= r2.p_n / (sqrt2n * r2.p_nm1);
      return std::isfinite(x);
    }
  }
  return false;
}

// Positive half of the roots (descending), plus 0 for odd n.
std::vector<double> newton_asymptotic_roots(int n, bool& ok) {
  const int m = (n + 1) / 2;
  std::vector<double> roots(m);
  double z = 0.0;
  ok = true;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[i - 2];
    }
    if (n % 2 == 1 && i == m - 1) {
      z = 0.0;
    } else if (!newton_polish(n, z)) {
      ok = false;
      return roots;
    }
    roots[i] = z;
    if (i > 0 && !(roots[i] < roots[i - 1])) {
      ok = false;
      return roots;
    }
  }
  if (n % 2 == 0 && !(roots[m - 1] > 0.0)) ok = false;
  return roots;
}

std::vector<double> jacobi_eigen_roots(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const int m = (n + 1) / 2;
  std::vector<double> roots(m);
  for (int i = 0; i < m; ++i) {
    double z = solver.eigenvalues()[n - 1 - i];
    if (n % 2 == 1 && i == m - 1) {
      z = 0.0;
    } else {
      newton_polish(n, z);
    }
    roots[i] = z;
  }
  return roots;
}

}  // namespace

QuadratureRule1D gauss_hermite_rule(int n) {
  if (n < 1 || n > kMaxRuleOrder) throw ParameterError("gauss_hermite_rule: n must lie in [1, 2000]");
  bool ok = false;
  std::vector<double> half = newton_asymptotic_roots(n, ok);
  if (!ok) half = jacobi_eigen_roots(n);

  QuadratureRule1D rule;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.scaled_weights.resize(n);
  const double sqrt2n = std::sqrt(2.0 * n);
  const int m = static_cast<int>(half.size());
  for (int i = 0; i < m; ++i) {
    const double x = half[i];
    const auto r = orthonormal_hermite(n, x);
    const double log_pp = std::log(sqrt2n * std::abs(r.p_nm1)) + r.log_scale;
    const double log_w = std::log(2.0) - 2.0 * log_pp;
    const double w = std::exp(log_w);
    const double sw = std::exp(log_w + x * x);
    // descending positive roots fill from the top; mirror below.
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = rule.weights[i] = w;
    rule.scaled_weights[n - 1 - i] = rule.scaled_weights[i] = sw;
  }
  return rule;
}

std::shared_ptr<const QuadratureRule1D> cached_rule(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuadratureRule1D>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const QuadratureRule1D>(gauss_hermite_rule(n));
  return slot;
}

QuadratureRule1D golub_welsch_rule(int n) {
  if (n < 1 || n > 64) throw ParameterError("golub_welsch_rule: n must lie in [1, 64]");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule1D rule;
  rule.order = n;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()[i];
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes.push_back(x);
    rule.weights.push_back(sqrt_pi * v0 * v0);
    rule.scaled_weights.push_back(sqrt_pi * v0 * v0 * std::exp(x * x));
  }
  return rule;
}

GaussianEnvelope::GaussianEnvelope(double sx, double sy, double cx, double cy)
    : sigma_x(sx), sigma_y(sy), center_x(cx), center_y(cy) {
  if (!(sx > 0.0 && sy > 0.0) || !std::isfinite(sx) || !std::isfinite(sy)) {
    throw EnvelopeError("Gaussian envelope needs sigma_x, sigma_y > 0");
  }
}

GaussianEnvelope envelope_from_decay(const QuadraticDecay& decay, const LinearTilt& tilt) {
  if (!decay.is_positive_definite()) {
    std::ostringstream msg;
    msg << "integrand decay (" << decay.xx << ", " << decay.yy << ", " << decay.xy
        << ") is not negative definite in the exponent";
    throw EnvelopeError(msg.str());
  }
  // Largest t with decay - t * diag(decay) still positive semidefinite.
  const double r = decay.xy / (2.0 * std::sqrt(decay.xx * decay.yy));
  const double t = 1.0 - std::abs(r);
  // maximizer of -(xx x^2 + xy x y + yy y^2) + gx x + gy y
  const double det = 4.0 * decay.xx * decay.yy - decay.xy * decay.xy;
  const double cx = (2.0 * decay.yy * tilt.gx - decay.xy * tilt.gy) / det;
  const double cy = (2.0 * decay.xx * tilt.gy - decay.xy * tilt.gx) / det;
  return {t * decay.xx, t * decay.yy, cx, cy};
}

GaussianEnvelope envelope_for(const spaces::WeightSpec& spec, const QuadraticDecay& extra) {
  return envelope_from_decay(spaces::weight_decay(spec) + extra);
}

PlanarGrid::PlanarGrid(std::shared_ptr<const QuadratureRule1D> rx, std::shared_ptr<const QuadratureRule1D> ry,
                       GaussianEnvelope env)
    : rule_x(std::move(rx)), rule_y(std::move(ry)), envelope(env) {
  if (!rule_x || !rule_y || rule_x->nodes.empty() || rule_y->nodes.empty()) {
    throw ParameterError("PlanarGrid needs non-empty rules");
  }
}

PlanarGrid::PlanarGrid(int nodes, GaussianEnvelope env) : PlanarGrid(cached_rule(nodes), cached_rule(nodes), env) {}

cplx PlanarGrid::point(std::size_t i, std::size_t j) const {
  return {rule_x->nodes[i] / std::sqrt(envelope.sigma_x) + envelope.center_x,
          rule_y->nodes[j] / std::sqrt(envelope.sigma_y) + envelope.center_y};
}

cplx pairwise_sum(std::span<const cplx> terms) {
  constexpr std::size_t kBlock = 8;
  if (terms.size() <= kBlock) {
    cplx acc{};
    for (const auto& t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

ExpScaled reduce_scaled(std::vector<cplx>& mantissas, const std::vector<double>& exponents) {
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < mantissas.size(); ++k) {
    if (mantissas[k] != cplx{}) top = std::max(top, exponents[k]);
  }
  if (top == -std::numeric_limits<double>::infinity()) return {};
  for (std::size_t k = 0; k < mantissas.size(); ++k) {
    if (mantissas[k] != cplx{}) mantissas[k] *= std::exp(exponents[k] - top);
  }
  return {pairwise_sum(mantissas), top};
}

namespace {

cplx checked_value(const ExpScaled& v, const char* where) {
  const cplx out = v.value();
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
    throw NumericalError(std::string(where) + ": result overflows double precision");
  }
  return out;
}

}  // namespace

ExpScaled integrate_line_scaled(const LineFunction& f, const QuadratureRule1D& rule, double scale, double center) {
  if (!(scale > 0.0)) throw EnvelopeError("integrate_line: envelope scale must be positive");
  const std::size_t n = rule.nodes.size();
  std::vector<cplx> mantissas(n);
  std::vector<double> exponents(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rule.nodes[i] / scale + center;
    const ExpScaled v = f(x);
    if (!v.is_finite()) {
      std::ostringstream msg;
      msg << "integrate_line: non-finite integrand at node " << i << " (x = " << x << ")";
      throw NumericalError(msg.str());
    }
    mantissas[i] = rule.scaled_weights[i] * v.mantissa;
    exponents[i] = v.log_scale;
  }
  ExpScaled out = reduce_scaled(mantissas, exponents);
  out.mantissa /= scale;
  return out;
}

cplx integrate_line(const LineFunction& f, const QuadratureRule1D& rule, double scale, double center) {
  return checked_value(integrate_line_scaled(f, rule, scale, center), "integrate_line");
}

ExpScaled integrate_plane_scaled(const ComplexFunction& F, const PlanarGrid& grid) {
  const auto& rx = *grid.rule_x;
  const auto& ry = *grid.rule_y;
  const std::size_t nx = rx.nodes.size();
  const std::size_t ny = ry.nodes.size();
  std::vector<cplx> mantissas(nx * ny);
  std::vector<double> exponents(nx * ny);
  const double inv_x = 1.0 / std::sqrt(grid.envelope.sigma_x);
  const double inv_y = 1.0 / std::sqrt(grid.envelope.sigma_y);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const cplx z{rx.nodes[i] * inv_x + grid.envelope.center_x, ry.nodes[j] * inv_y + grid.envelope.center_y};
      const ExpScaled v = F(z);
      if (!v.is_finite()) {
        std::ostringstream msg;
        msg << "integrate_plane: non-finite integrand at grid point (" << i << ", " << j << ") z = " << z;
        throw NumericalError(msg.str());
      }
      mantissas[i * ny + j] = rx.scaled_weights[i] * ry.scaled_weights[j] * v.mantissa;
      exponents[i * ny + j] = v.log_scale;
    }
  }
  ExpScaled out = reduce_scaled(mantissas, exponents);
  out.mantissa /= std::sqrt(grid.envelope.sigma_x * grid.envelope.sigma_y);
  return out;
}

cplx integrate_plane(const ComplexFunction& F, const PlanarGrid& grid) {
  return checked_value(integrate_plane_scaled(F, grid), "integrate_plane");
}

ConvergenceCheck integrate_plane_checked(const ComplexFunction& F, const PlanarGrid& grid, double tolerance) {
  const cplx coarse = integrate_plane(F, grid);
  const int nx = std::min(2 * grid.rule_x->order, kMaxRuleOrder);
  const int ny = std::min(2 * grid.rule_y->order, kMaxRuleOrder);
  const PlanarGrid fine(cached_rule(nx), cached_rule(ny), grid.envelope);
  const cplx refined = integrate_plane(F, fine);
  const double delta = std::abs(refined - coarse);
  return {coarse, refined, delta, delta < tolerance};
}

}  // namespace holo::quadrature
