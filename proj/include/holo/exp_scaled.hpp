#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

namespace holo {

using cplx = std::complex<double>;

/**
 * A complex number stored as mantissa * exp(log_scale).
 *
 * Every function in this library has a Gaussian factor, and the weights
 * of the spaces grow or decay like exp(+-c|z|^2). Keeping the real part of
 * the exponent separate lets products such as psi(z) * conj(psi(z)) * w(z)
 * be formed at quadrature nodes where each factor alone would overflow or
 * underflow.
 */
struct ExpScaled {
  cplx mantissa{0.0, 0.0};
  double log_scale = 0.0;

  ExpScaled() = default;
  ExpScaled(cplx m) : mantissa(m) {}  // NOLINT(google-explicit-constructor)
  ExpScaled(cplx m, double k) : mantissa(m), log_scale(k) {}

  /// factor * exp(exponent), with Re(exponent) kept out of the mantissa.
  static ExpScaled from_exponent(cplx exponent, cplx factor = 1.0) {
    return {factor * std::polar(1.0, exponent.imag()), exponent.real()};
  }

  [[nodiscard]] cplx value() const {
    if (mantissa == cplx{}) return {};
    return mantissa * std::exp(log_scale);
  }

  /// value() * exp(shift), without forming value() first.
  [[nodiscard]] cplx value_shifted(double shift) const {
    if (mantissa == cplx{}) return {};
    return mantissa * std::exp(log_scale + shift);
  }

  [[nodiscard]] bool is_zero() const { return mantissa == cplx{}; }

  [[nodiscard]] bool is_finite() const {
    return std::isfinite(mantissa.real()) && std::isfinite(mantissa.imag()) &&
           !std::isnan(log_scale) && log_scale != std::numeric_limits<double>::infinity();
  }
};

inline ExpScaled operator*(const ExpScaled& a, const ExpScaled& b) {
  return {a.mantissa * b.mantissa, a.log_scale + b.log_scale};
}

inline ExpScaled operator*(const ExpScaled& a, cplx c) { return {a.mantissa * c, a.log_scale}; }
inline ExpScaled operator*(cplx c, const ExpScaled& a) { return a * c; }

inline ExpScaled conj(const ExpScaled& a) { return {std::conj(a.mantissa), a.log_scale}; }

/// Multiplies by exp(e) for a complex exponent e.
inline ExpScaled times_exp(const ExpScaled& a, cplx e) {
  return {a.mantissa * std::polar(1.0, e.imag()), a.log_scale + e.real()};
}

/// Sum of two scaled values, aligned to the larger scale.
inline ExpScaled operator+(const ExpScaled& a, const ExpScaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.log_scale >= b.log_scale) {
    return {a.mantissa + b.mantissa * std::exp(b.log_scale - a.log_scale), a.log_scale};
  }
  return {b.mantissa + a.mantissa * std::exp(a.log_scale - b.log_scale), b.log_scale};
}

inline ExpScaled operator-(const ExpScaled& a, const ExpScaled& b) {
  return a + ExpScaled{-b.mantissa, b.log_scale};
}

/// A map C -> C, evaluable pointwise. The currency between operations.
using ComplexFunction = std::function<ExpScaled(cplx)>;
/// A map R -> C.
using LineFunction = std::function<ExpScaled(double)>;
/// A two-argument kernel K(z, zeta).
using KernelFunction = std::function<ExpScaled(cplx, cplx)>;

/// Lifts an ordinary complex-valued callable.
template <class F>
ComplexFunction plain_function(F f) {
  return [f = std::move(f)](cplx z) { return ExpScaled{cplx(f(z))}; };
}

template <class F>
LineFunction plain_line_function(F f) {
  return [f = std::move(f)](double x) { return ExpScaled{cplx(f(x))}; };
}

inline ComplexFunction zero_function() {
  return [](cplx) { return ExpScaled{}; };
}

}  // namespace holo
