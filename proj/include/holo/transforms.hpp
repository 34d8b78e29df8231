#pragma once

#include <vector>

#include "holo/exp_scaled.hpp"
#include "holo/phase_params.hpp"
#include "holo/quadratic_form.hpp"
#include "holo/quadrature.hpp"
#include "holo/sparam.hpp"

namespace holo::transforms {

using hermite::SParam;

/// phi(z, x) = (a/2) z^2 + b z x + (c/2) x^2
cplx phase(const PhaseParams& p, cplx z, double x);

/// T f(z) = C_phi int e^{i phi(z, x)} f(x) dx. `f_decay` is eps in
/// |f(x)| = O(e^{-eps x^2}); eps >= 0 because the kernel decays on its own.
ExpScaled t_transform_scaled(const PhaseParams& p, const LineFunction& f, cplx z, double f_decay,
                             int nodes = quadrature::kDefaultNodes);
cplx t_transform(const PhaseParams& p, const LineFunction& f, cplx z, double f_decay,
                 int nodes = quadrature::kDefaultNodes);

/// T* phi(x) = C_phi int e^{-i conj(phi(z, x))} phi(z) e^{-2 Phi(z)} L(dz).
/// `phi_decay` is the quadratic decay of |phi| alone.
ExpScaled t_adjoint_scaled(const PhaseParams& p, const ComplexFunction& phi, double x, const QuadraticDecay& phi_decay,
                           int nodes = quadrature::kDefaultNodes);
cplx t_adjoint(const PhaseParams& p, const ComplexFunction& phi, double x, const QuadraticDecay& phi_decay,
               int nodes = quadrature::kDefaultNodes);

/// Standard Bargmann transform: t_transform with the standard triple.
cplx bargmann(const LineFunction& f, cplx z, double f_decay, int nodes = quadrature::kDefaultNodes);
/// Its adjoint: t_adjoint with the standard triple.
cplx bargmann_adjoint(const ComplexFunction& phi, double x, const QuadraticDecay& phi_decay,
                      int nodes = quadrature::kDefaultNodes);

/// L^2(R)-normalized Hermite function h_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}.
double hermite_function(int n, double x);
LineFunction hermite_function_handle(int n);

/// z^n / sqrt(pi 2^{n+1} n!): the orthonormal monomials of H_B.
cplx bargmann_monomial(int n, cplx z);
ComplexFunction bargmann_monomial_function(int n);

struct AbcResidual {
  double r1;  // (1-s^2)/(4s) - |b|^2/(4 Im c)
  cplx r2;    // (1+s^2)/(4s) - b^2/(4 Im c) - a/(2i)
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] bool satisfied(double tol = 1e-13) const { return max_abs() < tol; }
};

AbcResidual check_abc(const PhaseParams& p, SParam s);

/// (i/s, sign * i sqrt(1-s^2), re_c + i s); sign must be +1 or -1.
PhaseParams solve_abc(SParam s, int im_b_sign, double re_c);

/// (i/s, -i sqrt(1-s^2), i s), the triple of the kernel G1.
PhaseParams g1_triple(SParam s);
/// (i s, sqrt(1-s^2), i s), the triple of the kernel G2.
PhaseParams g2_triple(SParam s);

enum class IsoScaling {
  square_root,  // phi(sqrt(s/(1-s^2)) z): the isometric version
  unrooted,     // phi((s/(1-s^2)) z): the scaling as printed in the statement
};

/// X_s -> H_B: z -> k phi(k' z) exp((1+s^2)/(4(1-s^2)) z^2), k = sqrt(s/(1-s^2)),
/// k' = k or k^2 depending on `scaling`.
ComplexFunction iso_x_to_b(SParam s, ComplexFunction phi, IsoScaling scaling = IsoScaling::square_root);
/// H_B -> X_s: z -> (1/k) psi(z/k') exp(-(1+s^2)/(4s) z^2) with k' as above.
/// For the square-root scaling this is the exact inverse of iso_x_to_b.
ComplexFunction iso_b_to_x(SParam s, ComplexFunction psi, IsoScaling scaling = IsoScaling::square_root);

/// |LHS - RHS| of the correspondence between psi_n^s and Psi_n^{sqrt s, 0}:
///   LHS = psi_n^s(z) exp(-(1-s^2)/(4s)|z|^2 + (1+s^2)/(4s) z^2)
///   RHS = (-r)^n b_nn^{-1/2} Psi_n(r z) exp(-|r z|^2/4),  r = sqrt((1-s^2)/s)
double hermite_correspondence_residual(SParam s, int n, cplx z);

/// G1(z, zeta) = sqrt(1-s)/(sqrt(2) pi s^{1/4})
///   exp(sqrt((1-s)/(1+s)) z conj(zeta) + (1-s)/(4(1+s)) z^2 - (1-s+s^2)/(2s) conj(zeta)^2)
ExpScaled g1_kernel_scaled(SParam s, cplx z, cplx zeta);
cplx g1_kernel(SParam s, cplx z, cplx zeta);
KernelFunction g1_kernel_function(SParam s);
/// Decay of |G1(z, .)| in its second argument.
QuadraticDecay g1_kernel_decay(SParam s);

/// G2(z, zeta) = sqrt(1-s)/(sqrt(2) pi s^{1/4})
///   exp(-i sqrt((1-s)/(1+s)) z conj(zeta) + (1-s)/(4(1+s)) z^2 - conj(zeta)^2/2)
ExpScaled g2_kernel_scaled(SParam s, cplx z, cplx zeta);
cplx g2_kernel(SParam s, cplx z, cplx zeta);
KernelFunction g2_kernel_function(SParam s);
QuadraticDecay g2_kernel_decay(SParam s);

struct CompositionOptions {
  int inner_nodes = quadrature::kDefaultNodes;
  /// The outer rule carries exp(-(outer_scale x)^2). Its reach t_max /
  /// outer_scale bounds the Re z at which B can be trusted; its node spacing
  /// bounds Im z (the kernel oscillates like e^{i Im(z) x}). 301 nodes at 0.65
  /// reach x ~ 37 with spacing ~ 0.2.
  int outer_nodes = 301;
  double outer_scale = 0.65;
};

/// B(T* phi): T* phi is sampled once at the outer nodes by planar
/// quadrature, then B is a line sum over those samples for any z.
class BTStarComposition {
 public:
  BTStarComposition(const PhaseParams& p, const ComplexFunction& phi, const QuadraticDecay& phi_decay,
                    CompositionOptions options = {});

  [[nodiscard]] ExpScaled evaluate_scaled(cplx z) const;
  [[nodiscard]] cplx operator()(cplx z) const;
  [[nodiscard]] ComplexFunction as_function() const;

  /// T* phi at the outer nodes.
  [[nodiscard]] const std::vector<ExpScaled>& samples() const { return samples_; }
  [[nodiscard]] const std::vector<double>& sample_points() const { return points_; }
  /// Set when the inner grid exceeds 301 x 301 nodes.
  [[nodiscard]] bool cost_warning() const { return cost_warning_; }

 private:
  std::shared_ptr<const quadrature::QuadratureRule1D> outer_;
  double outer_scale_;
  std::vector<double> points_;
  std::vector<ExpScaled> samples_;
  bool cost_warning_;
};

/// One-shot B(T* phi)(z).
cplx compose_b_tstar(const PhaseParams& p, const ComplexFunction& phi, cplx z, const QuadraticDecay& phi_decay,
                     CompositionOptions options = {});

}  // namespace holo::transforms
