#pragma once

#include <complex>

namespace holo {

/**
 * Quadratic part of the log-magnitude of an integrand on C = R^2:
 *
 *   log|F(x + iy)| = -(xx * x^2 + xy * x * y + yy * y^2) + (lower order)
 *
 * Callers declare these decays explicitly; nothing is inferred.
 */
struct QuadraticDecay {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;

  constexpr QuadraticDecay() = default;
  constexpr QuadraticDecay(double x2, double y2, double cross = 0.0) : xx(x2), yy(y2), xy(cross) {}

  /// Decay of |exp(q z^2)|.
  static QuadraticDecay of_gaussian(std::complex<double> q) {
    return {-q.real(), q.real(), 2.0 * q.imag()};
  }
  /// Decay of |exp(q conj(z)^2)|.
  static QuadraticDecay of_conj_gaussian(std::complex<double> q) { return of_gaussian(std::conj(q)); }
  /// Decay of exp(-c |z|^2).
  static constexpr QuadraticDecay of_modulus(double c) { return {c, c, 0.0}; }

  [[nodiscard]] constexpr bool is_positive_definite() const {
    return xx > 0.0 && yy > 0.0 && 4.0 * xx * yy - xy * xy > 0.0;
  }

  constexpr QuadraticDecay& operator+=(const QuadraticDecay& o) {
    xx += o.xx;
    yy += o.yy;
    xy += o.xy;
    return *this;
  }
  friend constexpr QuadraticDecay operator+(QuadraticDecay a, const QuadraticDecay& b) { return a += b; }
  friend constexpr QuadraticDecay operator*(double k, QuadraticDecay a) {
    return {k * a.xx, k * a.yy, k * a.xy};
  }
};

/// Linear part of the log-magnitude: + gx * x + gy * y.
struct LinearTilt {
  double gx = 0.0;
  double gy = 0.0;
};

}  // namespace holo
