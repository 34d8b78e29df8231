#pragma once

#include <complex>

#include "holo/errors.hpp"

namespace holo::transforms {

/**
 * Coefficients of the quadratic phase
 *
 *   phi(z, x) = (a/2) z^2 + b z x + (c/2) x^2,   b != 0, Im c > 0.
 *
 * The triple (i/2, -i, i) is the standard Bargmann transform.
 */
class PhaseParams {
 public:
  PhaseParams(std::complex<double> a, std::complex<double> b, std::complex<double> c);

  static PhaseParams standard();

  [[nodiscard]] std::complex<double> a() const { return a_; }
  [[nodiscard]] std::complex<double> b() const { return b_; }
  [[nodiscard]] std::complex<double> c() const { return c_; }

  /// 2^{-1/2} pi^{-3/4} |b| (Im c)^{-1/4}
  [[nodiscard]] double c_phi() const;

 private:
  std::complex<double> a_, b_, c_;
};

}  // namespace holo::transforms
