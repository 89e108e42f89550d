#include <doctest.h>

#include <cmath>

#include "theta/engine.hpp"
#include "theta/verification.hpp"

using theta::Characteristic;
using theta::Complex;
using theta::Rational;
using theta::TauPoint;
using theta::ThetaEngine;

namespace {
Rational q(long long n, long long d) { return Rational(n, d); }
const Characteristic kOO{Rational(0), Rational(0)};
const Characteristic kHH{q(1, 2), q(1, 2)};
} // namespace

TEST_CASE("theta[0;0](0,i) equals the closed form pi^(1/4)/Gamma(3/4)") {
    ThetaEngine engine;
    double oracle = std::pow(M_PI, 0.25) / std::tgamma(0.75);
    Complex v = engine.theta_const(kOO, TauPoint(0.0, 1.0));
    CHECK(v.real() == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(std::abs(v.imag()) < 1e-16);
    CHECK(v.real() == doctest::Approx(1.0864348112133080).epsilon(1e-15));
}

TEST_CASE("theta[1/3;0](0,2i) against a 50-digit brute-force value") {
    ThetaEngine engine;
    Complex v = engine.theta_const({q(1, 3), Rational(0)}, TauPoint(0.0, 2.0));
    CHECK(std::abs(v - Complex(0.5587942668813045652493578)) < 1e-15);
}

TEST_CASE("odd characteristic vanishes at z = 0") {
    ThetaEngine engine;
    for (auto tau : {TauPoint(0.0, 1.0), TauPoint(0.3, 1.7), TauPoint(-0.4, 0.9)}) {
        CHECK(std::abs(engine.theta_const(kHH, tau)) < 1e-15);
        CHECK(std::abs(engine.theta_const({q(3, 2), q(-1, 2)}, tau)) < 1e-15);
    }
}

TEST_CASE("even characteristics have vanishing first derivative at z = 0") {
    ThetaEngine engine;
    for (auto tau : {TauPoint(0.0, 1.0), TauPoint(0.1, 0.6)}) {
        CHECK(std::abs(engine.theta_d1({Rational(0), q(1, 2)}, {}, tau)) < 1e-14);
        CHECK(std::abs(engine.theta_d1({q(1, 2), Rational(0)}, {}, tau)) < 1e-14);
        CHECK(std::abs(engine.theta_d1(kOO, {}, tau)) < 1e-14);
    }
}

TEST_CASE("the Jacobi derivative identity holds at machine precision") {
    ThetaEngine engine;
    for (auto tau : theta::default_tau_samples()) {
        Complex lhs = engine.dtheta_half(tau);
        Complex rhs = engine.jacobi_rhs(tau);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);
        CHECK(std::abs(rhs) > 0.0);
    }
    // frozen spot value at tau = i
    Complex w = engine.dtheta_half(TauPoint(0.0, 1.0));
    CHECK(w.real() == doctest::Approx(-2.848694603987787316).epsilon(1e-14));
    CHECK(std::abs(w.imag()) < 1e-14);
}

TEST_CASE("second derivative matches Richardson-extrapolated central differences") {
    ThetaEngine engine;
    TauPoint tau(0.2, 1.1);
    for (const Characteristic& c :
         {kOO, Characteristic{q(1, 3), q(1, 7)}, Characteristic{q(2, 5), q(3, 4)}}) {
        auto d2 = [&](double h) {
            return (engine.theta(c, Complex(h), tau) - 2.0 * engine.theta(c, Complex(0.0), tau) +
                    engine.theta(c, Complex(-h), tau)) /
                   (h * h);
        };
        // h large enough that double rounding in the h^2 division stays tiny,
        // one Richardson step on the h^2 truncation error
        double h = 1e-3;
        Complex fd = (4.0 * d2(h / 2.0) - d2(h)) / 3.0;
        CHECK(std::abs(engine.theta_d2(c, {}, tau) - fd) < 1e-8);
    }
}

TEST_CASE("zero location formula") {
    CHECK(ThetaEngine::zero_location(kHH, TauPoint(0.3, 1.7)) == Complex(0.0));
    CHECK(ThetaEngine::zero_location(kOO, TauPoint(0.0, 1.0)) == Complex(0.5, 0.5));
    Complex z0 = ThetaEngine::zero_location({q(1, 3), q(1, 6)}, TauPoint(0.0, 2.0));
    CHECK(z0.real() == doctest::Approx(1.0 / 3));
    CHECK(z0.imag() == doctest::Approx(1.0 / 3));

    ThetaEngine engine;
    TauPoint tau(0.4, 1.3);
    for (auto c : {Characteristic{q(1, 7), q(2, 5)}, Characteristic{q(5, 12), q(11, 12)}}) {
        CHECK(std::abs(engine.theta(c, ThetaEngine::zero_location(c, tau), tau)) < 1e-12);
    }
}

TEST_CASE("quasi-periodicity spot check") {
    ThetaEngine engine;
    TauPoint tau(0.0, 1.0);
    Characteristic c = kOO;
    Complex z(0.3, 0.2);
    // theta(z + tau + 1) = e^{-pi i tau - 2 pi i z} theta(z)
    Complex lhs = engine.theta(c, z + tau.value + 1.0, tau);
    Complex factor = std::exp(Complex(0.0, -M_PI) * tau.value + Complex(0.0, -2.0 * M_PI) * z);
    CHECK(std::abs(lhs - factor * engine.theta(c, z, tau)) < 1e-11);
}

TEST_CASE("truncation: doubling the half-width is stable") {
    ThetaEngine engine;
    theta::Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Characteristic c{rng.rational(12), rng.rational(12)};
        TauPoint tau(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0));
        Complex z(rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5));
        int n = engine.half_width(c, z, tau, 0);
        Complex a = theta_reference(c, z, tau, 0, n);
        Complex b = theta_reference(c, z, tau, 0, 2 * n);
        CHECK(std::abs(a - b) <=
              std::max(engine.params().abs_tol, 16 * 1e-16 * std::abs(b)));
        CHECK(std::abs(engine.theta(c, z, tau) - b) < 1e-14 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("engine rejects bad tau and pathological widths") {
    ThetaEngine engine;
    CHECK_THROWS_AS(TauPoint(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(TauPoint(1.0, -2.0), std::domain_error);
    TauPoint shallow(0.0, 0.04); // below the default Im floor
    CHECK_THROWS_AS(engine.theta_const(kOO, shallow), std::domain_error);

    theta::SeriesParams tight;
    tight.min_im_tau = 1e-6;
    tight.max_half_width = 8;
    ThetaEngine small(tight);
    CHECK_THROWS_AS(small.theta_const(kOO, TauPoint(0.0, 0.05)), std::domain_error);
}

TEST_CASE("huge characteristic entries stay exact through reduction") {
    ThetaEngine engine;
    TauPoint tau(0.3, 1.1);
    // [3^40 / 7; 3^40 / 5 ] reduces exactly; the series never sees big numbers
    Rational big1(theta::pow3(40), theta::BigInt(7));
    Rational big2(theta::pow3(40), theta::BigInt(5));
    Characteristic c{big1, big2};
    Characteristic reduced{big1.frac(), big2.frac()};
    Complex direct = engine.theta_const(c, tau);
    auto red = theta::reduce(c);
    CHECK(red.canonical == reduced);
    Complex via = red.phase.value() * engine.theta_const(reduced, tau);
    CHECK(std::abs(direct - via) < 1e-13 * std::max(1.0, std::abs(via)));
}
