#pragma once

#include <memory>
#include <span>
#include <vector>

#include "holo/exp_scaled.hpp"
#include "holo/quadratic_form.hpp"
#include "holo/weight_spec.hpp"

namespace holo::quadrature {

/// Default node count per axis; every tolerance in the suites is quoted here.
inline constexpr int kDefaultNodes = 201;
inline constexpr int kMaxRuleOrder = 2000;

/**
 * n-point Gauss-Hermite rule for the weight exp(-x^2) on R.
 *
 * `scaled_weights[i] = weights[i] * exp(nodes[i]^2)` is computed directly in
 * log form, so it stays finite even where `weights[i]` underflows to zero.
 * Integrals in this library only ever use the scaled weights.
 */
struct QuadratureRule1D {
  std::vector<double> nodes;           // ascending, symmetric about 0
  std::vector<double> weights;         // positive (may underflow for large n)
  std::vector<double> scaled_weights;  // weights * exp(nodes^2)
  int order = 0;
};

/// Newton on the normalized Hermite recurrence with asymptotic starting
/// guesses. Falls back to Jacobi-matrix eigenvalues as starting guesses if
/// Newton loses a root. Throws ParameterError unless 1 <= n <= 2000.
QuadratureRule1D gauss_hermite_rule(int n);

/// Shared immutable copy of gauss_hermite_rule(n); computed once per n.
std::shared_ptr<const QuadratureRule1D> cached_rule(int n);

/// Golub-Welsch: eigen-decomposition of the symmetric Jacobi matrix of the
/// Hermite recurrence. Independent of gauss_hermite_rule; limited to n <= 64.
QuadratureRule1D golub_welsch_rule(int n);

/// exp(-sigma_x (x - cx)^2 - sigma_y (y - cy)^2): the decay that the planar
/// rule absorbs into its weights.
struct GaussianEnvelope {
  double sigma_x = 1.0;
  double sigma_y = 1.0;
  double center_x = 0.0;
  double center_y = 0.0;

  GaussianEnvelope() = default;
  GaussianEnvelope(double sx, double sy, double cx = 0.0, double cy = 0.0);
};

/// Axis-aligned envelope dominated by `decay`, centered at the maximizer of
/// -decay + tilt. Throws EnvelopeError if `decay` is not positive definite.
GaussianEnvelope envelope_from_decay(const QuadraticDecay& decay, const LinearTilt& tilt = {});

/// Envelope of weight(spec) * integrand, where the integrand's own decay is
/// `extra`. For Xs(s) with |e^{-z^2/2} poly|^2 (extra = (1, -1)) this is
/// (1 - s, (1 - s) / s).
GaussianEnvelope envelope_for(const spaces::WeightSpec& spec, const QuadraticDecay& extra);

struct PlanarGrid {
  std::shared_ptr<const QuadratureRule1D> rule_x;
  std::shared_ptr<const QuadratureRule1D> rule_y;
  GaussianEnvelope envelope;

  PlanarGrid(std::shared_ptr<const QuadratureRule1D> rx, std::shared_ptr<const QuadratureRule1D> ry,
             GaussianEnvelope env);
  PlanarGrid(int nodes, GaussianEnvelope env);

  [[nodiscard]] std::size_t size() const { return rule_x->nodes.size() * rule_y->nodes.size(); }
  /// Point of node (i, j).
  [[nodiscard]] cplx point(std::size_t i, std::size_t j) const;
};

/// Cascade summation: deterministic order, error O(log n) eps.
cplx pairwise_sum(std::span<const cplx> terms);

/// sum_k mantissas[k] * exp(exponents[k]), aligned to the largest exponent
/// before a pairwise reduction. Overwrites `mantissas`.
ExpScaled reduce_scaled(std::vector<cplx>& mantissas, const std::vector<double>& exponents);

/// int_R f(x) dx with the nodes mapped to x = t / scale + center; the
/// Gaussian exp(-(scale (x - center))^2) is carried by the rule.
ExpScaled integrate_line_scaled(const LineFunction& f, const QuadratureRule1D& rule, double scale,
                                double center = 0.0);
cplx integrate_line(const LineFunction& f, const QuadratureRule1D& rule, double scale,
                    double center = 0.0);

/// int_C F(z) L(dz) on a tensor grid with the envelope carried by the
/// weights. Throws NumericalError naming the grid point on non-finite F.
ExpScaled integrate_plane_scaled(const ComplexFunction& F, const PlanarGrid& grid);
cplx integrate_plane(const ComplexFunction& F, const PlanarGrid& grid);

struct ConvergenceCheck {
  cplx value;
  cplx refined;  // same integral with doubled node counts
  double delta;  // |refined - value|
  bool converged;
};

/// Integrates at the grid's resolution and again at twice the nodes.
ConvergenceCheck integrate_plane_checked(const ComplexFunction& F, const PlanarGrid& grid,
                                         double tolerance);

}  // namespace holo::quadrature
