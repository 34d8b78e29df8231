#pragma once

#include <functional>
#include <vector>

#include "holo/exp_scaled.hpp"
#include "holo/quadratic_form.hpp"
#include "holo/sparam.hpp"

namespace holo::hermite {

inline constexpr int kMaxHermiteDegree = 512;
inline constexpr int kMaxEllipseDegree = 64;
inline constexpr int kMaxOracleDegree = 20;

/// Decay of |psi_n^s|: |e^{-z^2/2}| = e^{-(x^2 - y^2)/2}.
inline constexpr QuadraticDecay kPsiDecay{0.5, -0.5};
/// Decay of |psi_m^s conj(psi_n^s)|.
inline constexpr QuadraticDecay kPsiPairDecay{1.0, -1.0};

/// Physicists' Hermite polynomial by the three-term recurrence.
/// Throws ParameterError for n > 512 and NumericalError on overflow.
cplx hermite_poly(int n, cplx z);

/// b_nn(s) = (pi sqrt(s) / (1-s)) 2^n ((1+s)/(1-s))^n n!
double b_nn(int n, SParam s);
double log_b_nn(int n, SParam s);

struct HermiteNormalization {
  int n;
  SParam s;
  double b_nn;
};
HermiteNormalization hermite_normalization(int n, SParam s);

/// b_kk(s)^{-1/2} H_k(z) for k = 0..n_max, by a recurrence that carries the
/// normalization along, so no intermediate grows factorially.
std::vector<cplx> normalized_hermite_all(int n_max, SParam s, cplx z);

/// psi_n^s(z) = b_nn(s)^{-1/2} e^{-z^2/2} H_n(z).
cplx psi_s(int n, SParam s, cplx z);
ExpScaled psi_s_scaled(int n, SParam s, cplx z);
ComplexFunction psi_s_function(int n, SParam s);

/**
 * Parameters of the elliptic disk E_rho(alpha, beta) and the associated
 * system Psi_n^{alpha,beta}:
 *
 *   mu     = (1 - alpha^2 - beta^2 + 2 i beta) / (1 + alpha^2 + beta^2)
 *   lambda = 2 alpha^2 / ((1 + alpha^2 + beta^2)(1 - alpha^2 - beta^2 - 2 i beta))
 *   zeta   = c1 z + c2 conj(z),  c1 = (alpha + 1 + i beta)/2,  c2 = (alpha - 1 + i beta)/2
 */
struct EllipseParams {
  double alpha;
  double beta;
  cplx mu;
  cplx lambda;
  cplx zeta_c1;
  cplx zeta_c2;
};

/// Requires alpha > 0 and (alpha, beta) != (1, 0).
EllipseParams ellipse_params(double alpha, double beta);

/// zeta = alpha x + i (beta x + xi) for z = x + i xi.
cplx zeta_map(const EllipseParams& p, cplx z);

/// Psi_0(z) = exp(mu z^2 / 4)
cplx psi0_ellipse(const EllipseParams& p, cplx z);
ExpScaled psi0_ellipse_scaled(const EllipseParams& p, cplx z);

enum class SqrtBranch { principal, negated };

/// Psi_n(z) = (-1)^n (lambda/2)^{n/2} H_n(sqrt(lambda/2) z) Psi_0(z), with one
/// branch of sqrt(lambda/2) used for both factors. The result does not
/// depend on the branch because H_n(-w) = (-1)^n H_n(w).
cplx psi_n_ellipse(int n, const EllipseParams& p, cplx z, SqrtBranch branch = SqrtBranch::principal);
ExpScaled psi_n_ellipse_scaled(int n, const EllipseParams& p, cplx z,
                               SqrtBranch branch = SqrtBranch::principal);
ComplexFunction psi_n_ellipse_function(int n, const EllipseParams& p);

/// n-th derivative of an entire function at z by the trapezoid rule on the
/// Cauchy circle |w - z| = radius.
cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx z, int n, double radius, int points);

/// e^{lambda z^2/2} (d/dz)^n e^{-lambda z^2/2}, computed by the Cauchy integral
/// on the unit circle around z with 64 (n+1) points. Independent of the
/// Hermite recurrence; n <= 20.
cplx rodrigues_oracle(int n, cplx lambda, cplx z);

}  // namespace holo::hermite
