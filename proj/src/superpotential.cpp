#include "esusy/superpotential.hpp"

#include <cmath>

#include "esusy/errors.hpp"

namespace esusy {

Branch classify(double lambda0) {
    if (lambda0 == 0.0) return Branch::Conventional;
    return lambda0 < 0.0 ? Branch::Excluded : Branch::Complex;
}

Complex Superpotential::operator()(double x) const {
    const double al = alpha_(x);
    return {-alpha_.d1(x) / al, lambda_ / (al * al)};
}

Complex Superpotential::d1(double x) const {
    const double al = alpha_(x);
    const double l1 = alpha_.d1(x) / al;
    return {-(alpha_.d2(x) / al - l1 * l1),
            -2.0 * lambda_ * alpha_.d1(x) / (al * al * al)};
}

Complex Superpotential::d2(double x) const {
    return 2.0 * (*this)(x) * d1(x) - V().d1(x);
}

double Superpotential::beta_R(double x) const { return (*this)(x).real(); }
double Superpotential::beta_I(double x) const { return (*this)(x).imag(); }

Superpotential beta(const AlphaFunction& alpha, double lambda) {
    const double l0 = alpha.lambda0();
    if (lambda == 0.0) {
        throw ZeroLambdaBranch(
            "lambda = 0 is the conventional real branch; use "
            "beta_conventional for the degenerate check");
    }
    if (std::abs(lambda * lambda - l0) > 1e-12 * std::max(1.0, l0)) {
        throw LambdaMismatch("lambda^2 does not match the alpha function's "
                             "Ermakov constant");
    }
    return Superpotential(alpha, lambda);
}

ConventionalSuperpotential beta_conventional(const AlphaFunction& alpha) {
    return ConventionalSuperpotential{alpha};
}

double riccati_residual(const Superpotential& b, double x) {
    const Complex bx = b(x);
    return std::abs(-b.d1(x) + bx * bx + b.epsilon() - b.V()(x));
}

Hydrodynamics hydrodynamics(const Superpotential& b, double x) {
    const double rho = b.alpha()(x) * b.alpha()(x);
    const double v = -2.0 * b.beta_I(x);
    return {rho, v, v * rho};
}

Complex TransformationFunction::operator()(double x) const {
    return std::polar(alpha_(x), phase(x));
}

Complex TransformationFunction::d1(double x) const {
    // u' = (alpha' - i lambda/alpha) e^{i Xi}
    const Complex radial{alpha_.d1(x), -lambda_ / alpha_(x)};
    return radial * std::polar(1.0, phase(x));
}

Complex TransformationFunction::d2(double x) const {
    const double al = alpha_(x);
    const double radial = alpha_.d2(x) - lambda_ * lambda_ / (al * al * al);
    return radial * std::polar(1.0, phase(x));
}

double TransformationFunction::phase(double x) const {
    return -lambda_ * phase_(x);
}

double TransformationFunction::density(double x) const {
    const double al = alpha_(x);
    return al * al;
}

TransformationFunction transformation_function(const AlphaFunction& alpha,
                                               double lambda, double x0) {
    const double l0 = alpha.lambda0();
    if (lambda == 0.0) {
        throw ZeroLambdaBranch("lambda = 0 reduces u to alpha itself");
    }
    if (std::abs(lambda * lambda - l0) > 1e-12 * std::max(1.0, l0)) {
        throw LambdaMismatch("lambda^2 does not match the alpha function's "
                             "Ermakov constant");
    }
    auto inv_sq = [alpha](double y) {
        const double a = alpha(y);
        return 1.0 / (a * a);
    };
    // 4096 cells, Richardson-refined until the phase estimate reaches 1e-10
    for (int cells = 4096; cells <= 32768; cells *= 2) {
        CumulativeIntegral phase(inv_sq, alpha.domain(), x0, cells);
        if (std::abs(lambda) * phase.error_estimate() <= 1e-10) {
            return TransformationFunction(alpha, lambda, std::move(phase));
        }
    }
    CumulativeIntegral phase(inv_sq, alpha.domain(), x0, 32768);
    throw QuadratureFailure("phase table error above 1e-10",
                            std::abs(lambda) * phase.error_estimate());
}

} // namespace esusy
