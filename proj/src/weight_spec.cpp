#include "holo/weight_spec.hpp"

#include <cmath>
#include <sstream>

namespace holo::spaces {

using cplx = std::complex<double>;

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

double phi_weight(const transforms::PhaseParams& p, cplx z) {
  const cplx a = p.a();
  const cplx b = p.b();
  const double im_c = p.c().imag();
  const cplx zb = std::conj(z);
  const cplx t1 = std::norm(b * z) / (4.0 * im_c);
  const cplx t2 = (b * b * z * z + std::conj(b) * std::conj(b) * zb * zb) / (8.0 * im_c);
  const cplx t3 = (a * z * z - std::conj(a) * zb * zb) / cplx(0.0, 4.0);
  const cplx phi = t1 - t2 - t3;
  const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
  if (std::abs(phi.imag()) >= 1e-10 * std::max(1.0, scale)) {
    std::ostringstream msg;
    msg << "phi_weight: imaginary residual " << phi.imag() << " at z = " << z;
    throw ConsistencyError(msg.str());
  }
  return phi.real();
}

double weight_exponent(const WeightSpec& spec, cplx z) {
  return std::visit(overloaded{
                        [&](const XsWeight& w) {
                          const double s = w.s.value();
                          const double z2_re = (z * z).real();  // (z^2 + conj(z)^2) / 2
                          return -(1.0 - s * s) / (2.0 * s) * std::norm(z) + (1.0 + s * s) / (2.0 * s) * z2_re;
                        },
                        [&](const StandardBargmannWeight&) { return -0.5 * std::norm(z); },
                        [&](const PhiWeight& w) { return -2.0 * phi_weight(w.p, z); },
                    },
                    spec);
}

QuadraticDecay weight_decay(const WeightSpec& spec) {
  return std::visit(overloaded{
                        [](const XsWeight& w) {
                          const double s = w.s.value();
                          return QuadraticDecay{-s, 1.0 / s};
                        },
                        [](const StandardBargmannWeight&) { return QuadraticDecay::of_modulus(0.5); },
                        [](const PhiWeight& w) {
                          // Phi is an exact quadratic form; read off its coefficients.
                          const double xx = phi_weight(w.p, {1.0, 0.0});
                          const double yy = phi_weight(w.p, {0.0, 1.0});
                          const double xy = phi_weight(w.p, {1.0, 1.0}) - xx - yy;
                          return QuadraticDecay{2.0 * xx, 2.0 * yy, 2.0 * xy};
                        },
                    },
                    spec);
}

std::string describe(const WeightSpec& spec) {
  return std::visit(overloaded{
                        [](const XsWeight& w) {
                          std::ostringstream out;
                          out << "Xs(s=" << w.s.value() << ")";
                          return out.str();
                        },
                        [](const StandardBargmannWeight&) { return std::string("StandardBargmann"); },
                        [](const PhiWeight& w) {
                          std::ostringstream out;
                          out << "PhiWeight(a=" << w.p.a() << ", b=" << w.p.b() << ", c=" << w.p.c() << ")";
                          return out.str();
                        },
                    },
                    spec);
}

}  // namespace holo::spaces
