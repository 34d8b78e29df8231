#include "holo/phase_params.hpp"

#include <cmath>
#include <numbers>

namespace holo::transforms {

PhaseParams::PhaseParams(std::complex<double> a, std::complex<double> b, std::complex<double> c)
    : a_(a), b_(b), c_(c) {
  if (b == std::complex<double>{}) throw ParameterError("PhaseParams: b must be nonzero");
  if (!(c.imag() > 0.0)) throw ParameterError("PhaseParams: Im c must be positive");
  if (!std::isfinite(std::abs(a)) || !std::isfinite(std::abs(b)) || !std::isfinite(std::abs(c))) {
    throw ParameterError("PhaseParams: coefficients must be finite");
  }
}

PhaseParams PhaseParams::standard() { return {{0.0, 0.5}, {0.0, -1.0}, {0.0, 1.0}}; }

double PhaseParams::c_phi() const {
  return std::pow(2.0, -0.5) * std::pow(std::numbers::pi, -0.75) * std::abs(b_) * std::pow(c_.imag(), -0.25);
}

}  // namespace holo::transforms
