#include "holo/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "holo/hermite.hpp"

namespace holo::spaces {

using quadrature::PlanarGrid;

namespace {

PlanarGrid grid_for(const WeightSpec& spec, const QuadraticDecay& hint, int nodes) {
  return {nodes, quadrature::envelope_for(spec, hint)};
}

}  // namespace

cplx inner_product(const ComplexFunction& f, const ComplexFunction& g, const WeightSpec& spec,
                   const QuadraticDecay& decay_hint, int nodes) {
  const PlanarGrid grid = grid_for(spec, decay_hint, nodes);
  const auto integrand = [&](cplx z) {
    ExpScaled v = f(z) * conj(g(z));
    v.log_scale += weight_exponent(spec, z);
    return v;
  };
  return quadrature::integrate_plane(integrand, grid);
}

GramReport summarize_gram(std::vector<cplx> entries, int N) {
  GramReport r;
  r.dimension = N;
  r.entries = std::move(entries);
  for (int m = 0; m < N; ++m) {
    for (int n = 0; n < N; ++n) {
      const cplx g = r.at(m, n);
      r.hermitian_residual = std::max(r.hermitian_residual, std::abs(g - std::conj(r.at(n, m))));
      const double target = m == n ? 1.0 : 0.0;
      r.max_identity_deviation = std::max(r.max_identity_deviation, std::abs(g - target));
      if (m == n) {
        r.max_diag_deviation = std::max(r.max_diag_deviation, std::abs(g - 1.0));
      } else {
        r.max_offdiag = std::max(r.max_offdiag, std::abs(g));
        const double scale = std::sqrt(std::abs(r.at(m, m)) * std::abs(r.at(n, n)));
        r.max_relative_offdiag = std::max(r.max_relative_offdiag, std::abs(g) / scale);
      }
    }
  }
  return r;
}

GramReport gram_matrix(const FunctionFamily& family, int N, const WeightSpec& spec, const QuadraticDecay& decay_hint,
                       int nodes) {
  return gram_matrix_on_grid(family, N, spec, grid_for(spec, decay_hint, nodes));
}

GramReport gram_matrix_on_grid(const FunctionFamily& family, int N, const WeightSpec& spec, const PlanarGrid& grid) {
  if (N < 1) throw ParameterError("gram_matrix: N must be positive");
  const std::size_t nx = grid.rule_x->nodes.size();
  const std::size_t ny = grid.rule_y->nodes.size();
  const std::size_t count = nx * ny;

  std::vector<ComplexFunction> fs;
  fs.reserve(N);
  for (int n = 0; n < N; ++n) fs.push_back(family(n));

  // values[n][k]: family member n at node k, with half the weight exponent folded in
  std::vector<std::vector<ExpScaled>> values(N, std::vector<ExpScaled>(count));
  std::vector<double> node_weight(count);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const std::size_t k = i * ny + j;
      const cplx z = grid.point(i, j);
      const double half_e = 0.5 * weight_exponent(spec, z);
      node_weight[k] = grid.rule_x->scaled_weights[i] * grid.rule_y->scaled_weights[j];
      for (int n = 0; n < N; ++n) {
        ExpScaled v = fs[n](z);
        if (!v.is_finite()) throw NumericalError("gram_matrix: non-finite family value");
        v.log_scale += half_e;
        values[n][k] = v;
      }
    }
  }

  const double jac = 1.0 / std::sqrt(grid.envelope.sigma_x * grid.envelope.sigma_y);
  std::vector<cplx> entries(static_cast<std::size_t>(N) * N);
  std::vector<cplx> terms(count);
  for (int m = 0; m < N; ++m) {
    for (int n = 0; n < N; ++n) {
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < count; ++k) {
        if (!values[m][k].is_zero() && !values[n][k].is_zero()) {
          top = std::max(top, values[m][k].log_scale + values[n][k].log_scale);
        }
      }
      if (top == -std::numeric_limits<double>::infinity()) continue;
      for (std::size_t k = 0; k < count; ++k) {
        const ExpScaled& a = values[m][k];
        const ExpScaled& b = values[n][k];
        terms[k] = (a.is_zero() || b.is_zero())
                       ? cplx{}
                       : node_weight[k] * a.mantissa * std::conj(b.mantissa) * std::exp(a.log_scale + b.log_scale - top);
      }
      const cplx g = jac * quadrature::pairwise_sum(terms) * std::exp(top);
      if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) throw NumericalError("gram_matrix: entry overflows");
      entries[static_cast<std::size_t>(m * N + n)] = g;
    }
  }
  return summarize_gram(std::move(entries), N);
}

ExpScaled k_s_kernel_scaled(SParam s, cplx z, cplx zeta, double prefactor_scale) {
  const double sv = s.value();
  const cplx zb = std::conj(zeta);
  const cplx exponent = (1.0 - sv * sv) / (2.0 * sv) * z * zb - (1.0 + sv * sv) / (4.0 * sv) * (z * z + zb * zb);
  const double prefactor = prefactor_scale * (1.0 - sv * sv) / (2.0 * std::numbers::pi * sv);
  return ExpScaled::from_exponent(exponent, prefactor);
}

cplx k_s_kernel(SParam s, cplx z, cplx zeta, double prefactor_scale) {
  return k_s_kernel_scaled(s, z, zeta, prefactor_scale).value();
}

KernelFunction k_s_kernel_function(SParam s, double prefactor_scale) {
  return [s, prefactor_scale](cplx z, cplx zeta) { return k_s_kernel_scaled(s, z, zeta, prefactor_scale); };
}

QuadraticDecay k_s_kernel_decay(SParam s) {
  const double sv = s.value();
  return QuadraticDecay::of_conj_gaussian(-(1.0 + sv * sv) / (4.0 * sv));
}

cplx mehler_partial_sum(SParam s, int N, cplx z, cplx zeta) {
  if (N < 0 || N > hermite::kMaxEllipseDegree) throw ParameterError("mehler_partial_sum: N must lie in [0, 64]");
  const auto pz = hermite::normalized_hermite_all(N, s, z);
  const auto pw = hermite::normalized_hermite_all(N, s, zeta);
  cplx acc{};
  for (int n = 0; n <= N; ++n) acc += pz[n] * std::conj(pw[n]);
  return acc * std::exp(-0.5 * z * z - 0.5 * std::conj(zeta * zeta));
}

ExpScaled projection_kernel_B_scaled(cplx z, cplx zeta) {
  return ExpScaled::from_exponent(0.5 * z * std::conj(zeta), 1.0 / (2.0 * std::numbers::pi));
}

cplx projection_kernel_B(cplx z, cplx zeta) { return projection_kernel_B_scaled(z, zeta).value(); }

KernelFunction projection_kernel_B_function() { return projection_kernel_B_scaled; }

cplx psi_kernel(const PhaseParams& p, cplx z, cplx zeta) {
  const cplx a = p.a();
  const cplx b = p.b();
  const double im_c = p.c().imag();
  return std::norm(b) * z * zeta / (4.0 * im_c) -
         (b * b * z * z + std::conj(b) * std::conj(b) * zeta * zeta) / (8.0 * im_c) -
         (a * z * z - std::conj(a) * zeta * zeta) / cplx(0.0, 4.0);
}

double c_Phi(const PhaseParams& p, CPhiConvention conv) {
  const double mod_b = std::abs(p.b());
  const double num = conv == CPhiConvention::squared_b ? mod_b * mod_b : mod_b;
  return num / (2.0 * std::numbers::pi * p.c().imag());
}

ExpScaled phi_projection_kernel_scaled(const PhaseParams& p, cplx z, cplx zeta, CPhiConvention conv) {
  return ExpScaled::from_exponent(2.0 * psi_kernel(p, z, std::conj(zeta)), c_Phi(p, conv));
}

KernelFunction phi_projection_kernel_function(const PhaseParams& p, CPhiConvention conv) {
  return [p, conv](cplx z, cplx zeta) { return phi_projection_kernel_scaled(p, z, zeta, conv); };
}

QuadraticDecay phi_projection_kernel_decay(const PhaseParams& p) {
  // conj(zeta)^2 coefficient of 2 Psi(z, conj(zeta))
  const cplx q = -std::conj(p.b() * p.b()) / (4.0 * p.c().imag()) + std::conj(p.a()) / cplx(0.0, 2.0);
  return QuadraticDecay::of_conj_gaussian(q);
}

std::vector<ExpScaled> sample_on_grid(const ComplexFunction& F, const PlanarGrid& grid) {
  const std::size_t ny = grid.rule_y->nodes.size();
  std::vector<ExpScaled> out(grid.size());
  for (std::size_t i = 0; i < grid.rule_x->nodes.size(); ++i) {
    for (std::size_t j = 0; j < ny; ++j) out[i * ny + j] = F(grid.point(i, j));
  }
  return out;
}

cplx apply_kernel_sampled(const KernelFunction& kernel, const WeightSpec& spec, const std::vector<ExpScaled>& samples,
                          const PlanarGrid& grid, cplx z) {
  if (samples.size() != grid.size()) throw ParameterError("apply_kernel_sampled: sample count does not match grid");
  const std::size_t nx = grid.rule_x->nodes.size();
  const std::size_t ny = grid.rule_y->nodes.size();
  std::vector<cplx> mantissas(grid.size());
  std::vector<double> exponents(grid.size());
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const std::size_t k = i * ny + j;
      const cplx zeta = grid.point(i, j);
      const ExpScaled v = kernel(z, zeta) * samples[k];
      if (!v.is_finite()) throw NumericalError("apply_kernel_sampled: non-finite integrand");
      mantissas[k] = grid.rule_x->scaled_weights[i] * grid.rule_y->scaled_weights[j] * v.mantissa;
      exponents[k] = v.log_scale + weight_exponent(spec, zeta);
    }
  }
  ExpScaled out = quadrature::reduce_scaled(mantissas, exponents);
  out.mantissa /= std::sqrt(grid.envelope.sigma_x * grid.envelope.sigma_y);
  const cplx value = out.value();
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw NumericalError("apply_kernel_sampled: result overflows double precision");
  }
  return value;
}

cplx apply_kernel(const KernelFunction& kernel, const WeightSpec& spec, const ComplexFunction& F, cplx z,
                  const QuadraticDecay& decay_hint, int nodes) {
  const PlanarGrid grid = grid_for(spec, decay_hint, nodes);
  const auto integrand = [&](cplx zeta) {
    ExpScaled v = kernel(z, zeta) * F(zeta);
    v.log_scale += weight_exponent(spec, zeta);
    return v;
  };
  return quadrature::integrate_plane(integrand, grid);
}

}  // namespace holo::spaces
