#include <cmath>
#include <numbers>

#include "doctest.h"
#include "esusy/errors.hpp"
#include "esusy/families.hpp"
#include "esusy/superpotential.hpp"

using namespace esusy;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("classification of the u-function branches") {
    CHECK(classify(0.0) == Branch::Conventional);
    CHECK(classify(-1.0) == Branch::Excluded);
    CHECK(classify(3.0 * kPi / 64) == Branch::Complex);
}

TEST_CASE("beta: periodic closed form [k sin(2kx) + i lambda]/[cos(2kx) + gamma]") {
    const double k = 1.0, lam = 1.0;
    PeriodicFamily fam = periodic(k, lam);
    for (double x : {-1.1, 0.0, 0.7, 2.3}) {
        const double den = std::cos(2 * k * x) + fam.gamma_lambda;
        const Complex expect{k * std::sin(2 * k * x) / den, lam / den};
        CHECK(std::abs(fam.beta(x) - expect) < 1e-13);
    }
}

TEST_CASE("beta: hyperbolic closed form [-(kappa/2) sinh + i lambda]/[cosh + theta]") {
    const double kap = 1.0, lam = 0.45;
    HyperbolicFamily fam = hyperbolic(kap, lam);
    for (double x : {-2.0, 0.0, 1.3}) {
        const double den = std::cosh(kap * x) + fam.theta_lambda;
        const Complex expect{-kap / 2 * std::sinh(kap * x) / den, lam / den};
        CHECK(std::abs(fam.beta(x) - expect) < 1e-13);
    }
}

TEST_CASE("beta: conventional limit -(kappa/2) tanh(kappa x/2)") {
    // theta = 1 alpha built directly; the lambda = 0 path goes through the
    // degenerate helper, not through beta()
    const double kap = 1.0, hk = kap / 2;
    FundamentalPair p;
    p.epsilon = -kap * kap / 4;
    p.V = zero_potential();
    p.domain = {-20.0, 20.0};
    p.z = {[hk](double x) { return Complex(std::exp(-hk * x), 0); },
           [hk](double x) { return Complex(-hk * std::exp(-hk * x), 0); },
           [hk](double x) { return Complex(hk * hk * std::exp(-hk * x), 0); }};
    p.v = {[hk](double x) { return Complex(std::exp(hk * x), 0); },
           [hk](double x) { return Complex(hk * std::exp(hk * x), 0); },
           [hk](double x) { return Complex(hk * hk * std::exp(hk * x), 0); }};
    p.w0 = Complex(kap, 0);
    AlphaFunction alpha = build_alpha(p, 0.5, 1.0, 0.5);
    ConventionalSuperpotential b0 = beta_conventional(alpha);
    for (double x : {-1.5, 0.2, 2.7}) {
        CHECK(b0(x) ==
              doctest::Approx(-hk * std::tanh(hk * x)).epsilon(1e-12));
    }
    // and the complex branch converges to it as lambda -> 0
    HyperbolicFamily tiny = hyperbolic(kap, 1e-6);
    CHECK(std::abs(tiny.beta(0.8).real() - b0(0.8)) < 1e-10);
    CHECK(std::abs(tiny.beta(0.8).imag()) < 1e-6);
}

TEST_CASE("beta rejects mismatched and zero lambda") {
    PeriodicFamily fam = periodic(1.0, 1.0);
    CHECK_THROWS_AS(beta(fam.alpha, 0.5), LambdaMismatch);
    CHECK_THROWS_AS(beta(fam.alpha, 0.0), ZeroLambdaBranch);
    CHECK_NOTHROW(beta(fam.alpha, -1.0)); // the conjugate branch
}

TEST_CASE("excluded branch: negative lambda0 forms build but never factorize") {
    // b^2 > 4ac keeps the hyperbolic form positive while lambda0 < 0; these
    // would need an imaginary lambda, which the approach excludes
    const double kap = 1.0, hk = kap / 2;
    FundamentalPair p;
    p.epsilon = -kap * kap / 4;
    p.V = zero_potential();
    p.domain = {-20.0, 20.0};
    p.z = {[hk](double x) { return Complex(std::exp(-hk * x), 0); },
           [hk](double x) { return Complex(-hk * std::exp(-hk * x), 0); },
           [hk](double x) { return Complex(hk * hk * std::exp(-hk * x), 0); }};
    p.v = {[hk](double x) { return Complex(std::exp(hk * x), 0); },
           [hk](double x) { return Complex(hk * std::exp(hk * x), 0); },
           [hk](double x) { return Complex(hk * hk * std::exp(hk * x), 0); }};
    p.w0 = Complex(kap, 0);
    AlphaFunction alpha = build_alpha(p, 0.5, 1.3, 0.5);
    CHECK(alpha.lambda0() < 0.0);
    CHECK(classify(alpha.lambda0()) == Branch::Excluded);
    CHECK_THROWS_AS(beta(alpha, std::sqrt(-alpha.lambda0())), LambdaMismatch);
    CHECK_THROWS_AS(transformation_function(alpha, 0.36, 0.0), LambdaMismatch);
}

TEST_CASE("conjugation: beta(-lambda) = conj(beta(+lambda))") {
    HyperbolicFamily plus = hyperbolic(1.0, 0.45);
    Superpotential minus = beta(plus.alpha, -0.45);
    for (double x : {-3.0, -0.2, 0.0, 1.6}) {
        CHECK(minus(x) == std::conj(plus.beta(x)));
    }
}

TEST_CASE("riccati_residual vanishes for all catalog families") {
    HyperbolicFamily hyp = hyperbolic(1.0, 0.45);
    CHECK(riccati_residual(hyp.beta, 1.3) < 1e-10);

    OscillatorFamily osc = osc_family(kPi / 4, std::sqrt(kPi) / 2, 1.0);
    CHECK(riccati_residual(osc.beta, 0.0) < 1e-10);

    PeriodicFamily per = periodic(1.0, 0.5);
    CHECK(riccati_residual(per.beta, 0.4) < 1e-10);
}

TEST_CASE("coupled real system: Re and Im parts vanish separately") {
    HyperbolicFamily fam = hyperbolic(1.0, 0.3);
    for (double x : {-0.9, 0.5, 2.1}) {
        const Complex b = fam.beta(x);
        const Complex db = fam.beta.d1(x);
        const double bR = b.real(), bI = b.imag();
        // -bR' + bR^2 - bI^2 + eps - V = 0
        const double re_eq = -db.real() + bR * bR - bI * bI + fam.epsilon;
        // -bI' + 2 bI bR = 0
        const double im_eq = -db.imag() + 2.0 * bI * bR;
        CHECK(std::abs(re_eq) < 1e-10);
        CHECK(std::abs(im_eq) < 1e-10);
    }
}

TEST_CASE("transformation function: modulus, origin, closed-form phase") {
    const double kap = 1.0, lam = 0.5;
    HyperbolicFamily fam = hyperbolic(kap, lam);
    const TransformationFunction& u = fam.u;
    CHECK(std::abs(u(0.0) - Complex(fam.alpha(0.0), 0)) < 1e-12);
    for (double x : {-4.0, -1.0, 0.3, 2.0}) {
        CHECK(std::abs(std::abs(u(x)) - fam.alpha(x)) < 1e-12);
        // theta = 0 case: Xi(x) = -atan(tanh(x/2))
        CHECK(std::abs(u.phase(x) + std::atan(std::tanh(x / 2))) < 1e-10);
    }
}

TEST_CASE("transformation function solves the linear equation") {
    OscillatorFamily osc = osc_family(kPi / 4, std::sqrt(kPi) / 2, 1.0);
    const TransformationFunction& u = osc.u;
    for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
        const Complex res =
            -u.d2(x) + (osc.alpha.V()(x) - osc.alpha.epsilon()) * u(x);
        const double scale = std::max(1.0, std::abs(u.d2(x)));
        CHECK(std::abs(res) < 1e-8 * scale);
    }
}

TEST_CASE("phase-origin independence up to a constant unimodular factor") {
    HyperbolicFamily fam = hyperbolic(1.0, 0.45);
    TransformationFunction u2 =
        transformation_function(fam.alpha, fam.lambda, 1.7);
    Complex ratio0{};
    bool first = true;
    for (double x : {-2.0, -0.3, 0.9, 2.5}) {
        const Complex prod = fam.u(x) * std::conj(u2(x));
        const double rho = fam.alpha(x) * fam.alpha(x);
        CHECK(std::abs(std::abs(prod) / rho - 1.0) < 1e-10);
        const Complex ratio = prod / rho; // constant unimodular factor
        if (first) {
            ratio0 = ratio;
            first = false;
        } else {
            CHECK(std::abs(ratio - ratio0) < 1e-10);
        }
    }
}

TEST_CASE("hydrodynamics: constant current -2 lambda") {
    HyperbolicFamily fam = hyperbolic(1.0, 0.5);
    const Hydrodynamics h0 = hydrodynamics(fam.beta, 0.0);
    CHECK(h0.rho == doctest::Approx(1.0).epsilon(1e-13)); // 1 + theta = 1
    CHECK(h0.velocity == doctest::Approx(-1.0).epsilon(1e-13));
    double xs[] = {-3.1, -1.2, -0.4, 0.1, 0.6, 1.1, 1.9, 2.8, 3.3, 4.0};
    for (double x : xs) {
        const Hydrodynamics h = hydrodynamics(fam.beta, x);
        CHECK(std::abs(h.current - (-2.0 * fam.lambda)) < 1e-12);
    }

    // the flux dies with lambda: a real u-function carries no current
    HyperbolicFamily tiny = hyperbolic(1.0, 1e-9);
    for (double x : {-1.0, 0.5}) {
        CHECK(std::abs(hydrodynamics(tiny.beta, x).velocity) < 2e-9);
    }
}

TEST_CASE("beta_I keeps the sign of lambda everywhere") {
    HyperbolicFamily fam = hyperbolic(1.0, 0.45);
    Superpotential minus = beta(fam.alpha, -0.45);
    for (double x = -5.0; x <= 5.0; x += 0.25) {
        CHECK(fam.beta.beta_I(x) > 0.0);
        CHECK(minus.beta_I(x) < 0.0);
    }
}
