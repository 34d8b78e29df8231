#pragma once

#include <functional>
#include <vector>

#include "holo/exp_scaled.hpp"
#include "holo/phase_params.hpp"
#include "holo/quadratic_form.hpp"
#include "holo/quadrature.hpp"
#include "holo/sparam.hpp"
#include "holo/weight_spec.hpp"

namespace holo::spaces {

using hermite::SParam;
using transforms::PhaseParams;

/// (f, g) = int f(z) conj(g(z)) e^{E(z)} L(dz) for the weight of `spec`.
/// `decay_hint` is the quadratic decay of |f conj(g)| alone; together with
/// the weight it must be a decaying Gaussian.
cplx inner_product(const ComplexFunction& f, const ComplexFunction& g, const WeightSpec& spec,
                   const QuadraticDecay& decay_hint, int nodes = quadrature::kDefaultNodes);

struct GramReport {
  int dimension = 0;
  std::vector<cplx> entries;  // row-major, G(m, n) = (f_m, f_n)
  double max_offdiag = 0.0;
  double max_diag_deviation = 0.0;  // max |G(n, n) - 1|
  /// max |G(m, n)| / sqrt(|G(m, m)| |G(n, n)|) over m != n: orthogonality
  /// without assuming a normalization.
  double max_relative_offdiag = 0.0;
  double hermitian_residual = 0.0;  // max |G(m, n) - conj(G(n, m))|
  /// max |G - I|
  double max_identity_deviation = 0.0;

  [[nodiscard]] cplx at(int m, int n) const { return entries[static_cast<std::size_t>(m * dimension + n)]; }
};

using FunctionFamily = std::function<ComplexFunction(int)>;

/// Gram matrix of family(0..N-1). Every entry is an independent weighted sum
/// over one shared grid. `decay_hint` must dominate |f_m conj(f_n)| for all
/// pairs.
GramReport gram_matrix(const FunctionFamily& family, int N, const WeightSpec& spec,
                       const QuadraticDecay& decay_hint, int nodes = quadrature::kDefaultNodes);

/// Same, on a caller-chosen grid. Used when the family is only trustworthy
/// on part of the plane that the decay-derived grid would cover.
GramReport gram_matrix_on_grid(const FunctionFamily& family, int N, const WeightSpec& spec,
                               const quadrature::PlanarGrid& grid);

/// Gram statistics of an already-filled matrix.
GramReport summarize_gram(std::vector<cplx> entries, int N);

/// K_s(z, zeta) = ((1-s^2)/(2 pi s)) exp((1-s^2)/(2s) z conj(zeta) - (1+s^2)/(4s)(z^2 + conj(zeta)^2)).
/// The second argument is conjugated internally. `prefactor_scale` exists so
/// the harness can be checked against a corrupted constant.
cplx k_s_kernel(SParam s, cplx z, cplx zeta, double prefactor_scale = 1.0);
ExpScaled k_s_kernel_scaled(SParam s, cplx z, cplx zeta, double prefactor_scale = 1.0);
KernelFunction k_s_kernel_function(SParam s, double prefactor_scale = 1.0);
/// Decay of |K_s(z, .)| in its second argument.
QuadraticDecay k_s_kernel_decay(SParam s);

/// sum_{n <= N} psi_n^s(z) conj(psi_n^s(zeta)); converges to K_s(z, zeta).
cplx mehler_partial_sum(SParam s, int N, cplx z, cplx zeta);

/// e^{z conj(zeta)/2} / (2 pi): the kernel of B B* on L^2_B.
cplx projection_kernel_B(cplx z, cplx zeta);
ExpScaled projection_kernel_B_scaled(cplx z, cplx zeta);
KernelFunction projection_kernel_B_function();

/// Psi(z, zeta) = |b|^2 z zeta/(4 Im c) - (b^2 z^2 + conj(b)^2 zeta^2)/(8 Im c) - (a z^2 - conj(a) zeta^2)/(4i).
/// Psi(z, conj(z)) = Phi(z).
cplx psi_kernel(const PhaseParams& p, cplx z, cplx zeta);

enum class CPhiConvention {
  squared_b,  // |b|^2 / (2 pi Im c): reproduces the weight e^{-2 Phi}
  linear_b,   // |b| / (2 pi Im c)
};

double c_Phi(const PhaseParams& p, CPhiConvention conv = CPhiConvention::squared_b);

/// C_Phi e^{2 Psi(z, conj(zeta))}: the kernel of T T* on L^2_Phi.
ExpScaled phi_projection_kernel_scaled(const PhaseParams& p, cplx z, cplx zeta,
                                       CPhiConvention conv = CPhiConvention::squared_b);
KernelFunction phi_projection_kernel_function(const PhaseParams& p,
                                              CPhiConvention conv = CPhiConvention::squared_b);
QuadraticDecay phi_projection_kernel_decay(const PhaseParams& p);

/// F at every node of `grid`, row-major as in PlanarGrid::point.
std::vector<ExpScaled> sample_on_grid(const ComplexFunction& F, const quadrature::PlanarGrid& grid);

/// int kernel(z, zeta) F(zeta) e^{E(zeta)} L(dzeta) with F given by its
/// samples on `grid`. Applying this to its own output on the same grid
/// composes the operator with itself.
cplx apply_kernel_sampled(const KernelFunction& kernel, const WeightSpec& spec, const std::vector<ExpScaled>& samples,
                          const quadrature::PlanarGrid& grid, cplx z);

/// int kernel(z, zeta) F(zeta) e^{E(zeta)} L(dzeta). `decay_hint` is the
/// decay of |kernel(z, .) F(.)| in zeta.
cplx apply_kernel(const KernelFunction& kernel, const WeightSpec& spec, const ComplexFunction& F, cplx z,
                  const QuadraticDecay& decay_hint, int nodes = quadrature::kDefaultNodes);

}  // namespace holo::spaces
