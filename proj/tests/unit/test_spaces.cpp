#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holo/errors.hpp"
#include "holo/hermite.hpp"
#include "holo/spaces.hpp"
#include "holo/transforms.hpp"

using namespace holo;
using namespace holo::spaces;
using hermite::SParam;

namespace {
const double kPi = std::numbers::pi;

std::vector<cplx> random_points(int count, double radius, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) out.push_back(std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng)));
  return out;
}

ComplexFunction monomial(int n) { return transforms::bargmann_monomial_function(n); }
}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("weight exponents") {
    const cplx z{0.7, -1.1};
    CHECK(weight_exponent(StandardBargmannWeight{}, z) == doctest::Approx(-std::norm(z) / 2.0));
    for (double sv : {0.25, 0.5, 0.75}) {
      const XsWeight xs{SParam(sv)};
      CHECK(weight_exponent(xs, 1.3) == doctest::Approx(sv * 1.3 * 1.3).epsilon(1e-14));
      CHECK(weight_exponent(xs, cplx(0.0, 1.3)) == doctest::Approx(-1.3 * 1.3 / sv).epsilon(1e-14));
    }
  }

  TEST_CASE("Phi weight") {
    const auto standard = transforms::PhaseParams::standard();
    const auto s = SParam(0.5);
    const auto g1 = transforms::g1_triple(s);
    for (const cplx z : random_points(200, 2.0, 3)) {
      CHECK(std::abs(phi_weight(standard, z) - std::norm(z) / 4.0) < 1e-14);
      const double expected = (1 - 0.25) / (4 * 0.5) * std::norm(z) - (1 + 0.25) / (8 * 0.5) * 2.0 * (z * z).real();
      CHECK(std::abs(phi_weight(g1, z) - expected) < 1e-13);
    }
    CHECK(phi_weight(g1, 0.0) == 0.0);
  }

  TEST_CASE("Psi kernel polarizes Phi") {
    const auto s = SParam(0.25);
    for (const auto& p : {transforms::g1_triple(s), transforms::g2_triple(s), transforms::PhaseParams(cplx(0.3, 1.0), cplx(1.0, -0.4), cplx(0.2, 0.8))}) {
      for (const cplx z : random_points(1000, 1.5, 5)) {
        CHECK(std::abs(psi_kernel(p, z, std::conj(z)) - phi_weight(p, z)) < 1e-13);
      }
      CHECK(psi_kernel(p, 0.0, 0.0) == cplx(0.0));
    }
    // abc triples share one Psi
    const double sv = 0.25;
    const cplx z{0.3, 0.4}, w{-0.6, 0.1};
    const cplx expected = (1 - sv * sv) / (4 * sv) * z * w - (1 + sv * sv) / (8 * sv) * (z * z + w * w);
    CHECK(std::abs(psi_kernel(transforms::g1_triple(s), z, w) - expected) < 1e-14);
    CHECK(std::abs(psi_kernel(transforms::g2_triple(s), z, w) - expected) < 1e-14);
  }

  TEST_CASE("inner products") {
    const auto s = SParam(0.5);
    const auto psi0 = hermite::psi_s_function(0, s);
    CHECK(std::abs(spaces::inner_product(psi0, psi0, XsWeight{s}, hermite::kPsiPairDecay) - 1.0) < 1e-10);
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const cplx v = spaces::inner_product(monomial(m), monomial(n), StandardBargmannWeight{}, QuadraticDecay{});
        CHECK(std::abs(v - (m == n ? 1.0 : 0.0)) < 1e-10);
      }
    }
    CHECK(spaces::inner_product(zero_function(), zero_function(), StandardBargmannWeight{}, QuadraticDecay{}) == cplx(0.0));
    CHECK_THROWS_AS(spaces::inner_product(psi0, psi0, XsWeight{s}, QuadraticDecay{}), EnvelopeError);
  }

  TEST_CASE("Gram matrices") {
    const auto s = SParam(0.5);
    const auto psi = [&](int n) { return hermite::psi_s_function(n, s); };
    const auto g8 = gram_matrix(psi, 8, XsWeight{s}, hermite::kPsiPairDecay);
    CHECK(g8.max_identity_deviation < 1e-9);
    CHECK(g8.hermitian_residual < 1e-12);

    const auto g1 = gram_matrix(psi, 1, XsWeight{s}, hermite::kPsiPairDecay);
    CHECK(g1.dimension == 1);
    CHECK(std::abs(g1.at(0, 0) - 1.0) < 1e-12);

    const auto p = hermite::ellipse_params(0.8, 0.4);
    const auto ge = gram_matrix([&](int n) { return hermite::psi_n_ellipse_function(n, p); }, 6,
                                StandardBargmannWeight{}, QuadraticDecay::of_gaussian(p.mu / 2.0));
    CHECK(ge.max_relative_offdiag < 1e-8);
    CHECK(ge.hermitian_residual < 1e-12 * std::abs(ge.at(5, 5)));
    CHECK(ge.at(0, 0).real() > 0.0);
  }

  TEST_CASE("Gram statistics") {
    const auto r = summarize_gram({2.0, cplx(0.0, 0.5), cplx(0.0, -0.5), 1.0}, 2);
    CHECK(r.max_offdiag == doctest::Approx(0.5));
    CHECK(r.max_diag_deviation == doctest::Approx(1.0));
    CHECK(r.max_identity_deviation == doctest::Approx(1.0));
    CHECK(r.max_relative_offdiag == doctest::Approx(0.5 / std::sqrt(2.0)));
    CHECK(r.hermitian_residual == 0.0);
  }

  TEST_CASE("K_s values and symmetry") {
    for (double sv : {0.25, 0.5, 0.75}) {
      const SParam s(sv);
      CHECK(k_s_kernel(s, 0.0, 0.0).real() == doctest::Approx((1 - sv * sv) / (2 * kPi * sv)).epsilon(1e-15));
      const auto zs = random_points(50, 1.5, 9);
      for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        const cplx a = k_s_kernel(s, zs[i], zs[i + 1]);
        CHECK(std::abs(a - std::conj(k_s_kernel(s, zs[i + 1], zs[i]))) < 1e-14 * std::max(1.0, std::abs(a)));
      }
    }
    CHECK(k_s_kernel(SParam(0.5), 0.0, 0.0).real() == doctest::Approx(0.2387324146).epsilon(1e-10));
    CHECK(k_s_kernel(SParam(0.5), 0.0, 0.0, 1.01).real() == doctest::Approx(1.01 * 0.2387324146).epsilon(1e-10));
  }

  TEST_CASE("K_s reproduces psi_n") {
    for (double sv : {0.25, 0.75}) {
      const SParam s(sv);
      const auto ks = k_s_kernel_function(s);
      for (int n : {0, 3, 8}) {
        for (const cplx z : random_points(3, 1.0, 13)) {
          const cplx got = apply_kernel(ks, XsWeight{s}, hermite::psi_s_function(n, s), z,
                                        hermite::kPsiDecay + k_s_kernel_decay(s));
          const cplx want = hermite::psi_s(n, s, z);
          CHECK(std::abs(got - want) < 1e-8 * std::max(std::abs(want), 1e-2));
        }
      }
    }
  }

  TEST_CASE("Mehler partial sums") {
    for (double sv : {0.25, 0.5, 0.75}) {
      const SParam s(sv);
      CHECK(mehler_partial_sum(s, 0, 0.0, 0.0).real() ==
            doctest::Approx((1 - sv) / (kPi * std::sqrt(sv))).epsilon(1e-14));
    }
    const SParam half(0.5);
    CHECK(std::abs(mehler_partial_sum(half, 40, 0.3, 0.1) - k_s_kernel(half, 0.3, 0.1)) < 1e-10);
    CHECK_THROWS_AS(mehler_partial_sum(half, 65, 0.0, 0.0), ParameterError);

    // at the origin the even terms shrink by rho^2 (2m+1)/(2m+2), rho = (1-s)/(1+s)
    for (double sv : {0.25, 0.5, 0.75}) {
      const SParam s(sv);
      const double rho = (1 - sv) / (1 + sv);
      const double t30 = std::norm(hermite::psi_s(30, s, 0.0));
      const double t32 = std::norm(hermite::psi_s(32, s, 0.0));
      CHECK(t32 / t30 == doctest::Approx(rho * rho * 31.0 / 32.0).epsilon(1e-12));
    }
  }

  TEST_CASE("Mehler error decreases with N and is set by the omitted terms") {
    const cplx z{0.3, 0.5}, w{-0.2, -0.6};
    for (double sv : {0.25, 0.5, 0.75}) {
      const SParam s(sv);
      const cplx k = k_s_kernel(s, z, w);
      double previous = INFINITY;
      for (int n = 6; n <= 60; n += 6) {
        const double e = std::abs(mehler_partial_sum(s, n, z, w) - k);
        CHECK(e <= previous);
        previous = e;
      }
      if (sv >= 0.5) CHECK(previous < 1e-9);
    }
    // At s = 1/4 the tail near the imaginary axis is still ~1e-8 at N = 60:
    // the terms carry e^{2 sqrt(2n) |Im z|} on top of rho^n.
    const SParam quarter(0.25);
    const cplx zi{-0.02, 0.80}, wi{-0.25, -0.95};
    const double e60 = std::abs(mehler_partial_sum(quarter, 60, zi, wi) - k_s_kernel(quarter, zi, wi));
    const double t61 = std::abs(hermite::psi_s(61, quarter, zi) * std::conj(hermite::psi_s(61, quarter, wi)));
    CHECK(e60 > 1e-9);
    CHECK(e60 < 10.0 * t61);
  }

  TEST_CASE("projection kernel of H_B") {
    CHECK(std::abs(projection_kernel_B(0.0, 1.7) - 1.0 / (2 * kPi)) < 1e-15);
    CHECK(std::abs(projection_kernel_B(2.0, 2.0) - std::exp(2.0) / (2 * kPi)) < 1e-15);
    CHECK(std::abs(projection_kernel_B(2.0, 2.0) - 1.1760048) < 1e-7);
    const auto kb = projection_kernel_B_function();
    for (int n = 0; n <= 6; ++n) {
      const cplx z{0.4, -0.8};
      const cplx got = apply_kernel(kb, StandardBargmannWeight{}, monomial(n), z, QuadraticDecay{});
      CHECK(std::abs(got - transforms::bargmann_monomial(n, z)) < 1e-9);
    }
    const auto p = hermite::ellipse_params(0.8, 0.4);
    for (int n = 0; n <= 4; ++n) {
      const cplx z{-0.5, 0.3};
      const cplx got = apply_kernel(kb, StandardBargmannWeight{}, hermite::psi_n_ellipse_function(n, p), z,
                                    QuadraticDecay::of_gaussian(p.mu / 4.0));
      CHECK(std::abs(got - hermite::psi_n_ellipse(n, p, z)) < 1e-8 * std::max(1.0, std::abs(got)));
    }
    CHECK(apply_kernel(kb, StandardBargmannWeight{}, zero_function(), 0.3, QuadraticDecay{}) == cplx(0.0));
  }

  TEST_CASE("C_Phi conventions") {
    const SParam s(0.5);
    const auto p = transforms::g1_triple(s);
    CHECK(c_Phi(p) == doctest::Approx((1 - 0.25) / (2 * kPi * 0.5)).epsilon(1e-15));
    CHECK(c_Phi(p, CPhiConvention::linear_b) == doctest::Approx(std::sqrt(0.75) / (2 * kPi * 0.5)).epsilon(1e-15));
  }

  TEST_CASE("sampled kernel application matches the direct one") {
    const SParam s(0.5);
    const auto ks = k_s_kernel_function(s);
    const auto f = hermite::psi_s_function(2, s);
    const QuadraticDecay decay = hermite::kPsiDecay + k_s_kernel_decay(s);
    const quadrature::PlanarGrid grid(201, quadrature::envelope_for(XsWeight{s}, decay));
    const auto samples = sample_on_grid(f, grid);
    const cplx z{0.2, 0.1};
    const cplx direct = apply_kernel(ks, XsWeight{s}, f, z, decay);
    CHECK(std::abs(apply_kernel_sampled(ks, XsWeight{s}, samples, grid, z) - direct) < 1e-15 * std::abs(direct));
  }
}
