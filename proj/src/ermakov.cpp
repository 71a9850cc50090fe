#include "esusy/ermakov.hpp"

#include <cmath>

#include "esusy/errors.hpp"
#include "esusy/quadrature.hpp"

namespace esusy {

CFunction second_solution(const CFunction& z, Complex w0, double x0,
                          const RealPotential& V, double epsilon) {
    // v = z w0 q with q(x) = \int_{x0}^x z^{-2}; the integral is accumulated
    // lazily per call (these seeds are cheap closed forms). The path is
    // scanned for zeros of z before integrating.
    auto q = [z, x0](double x) {
        const double a = std::min(x0, x);
        const double b = std::max(x0, x);
        const int scan = 512;
        const double step = (b - a) / scan;
        double floor_scale = 0.0;
        for (int i = 0; i <= scan; ++i) {
            floor_scale = std::max(floor_scale, std::abs(z(a + step * i)));
        }
        for (int i = 0; i <= scan; ++i) {
            const double xi = a + step * i;
            const double zi = std::abs(z(xi));
            // a zero lies within reach of this sample if |z| dips below the
            // distance a first-order excursion could close
            if (zi < 1e-12 * floor_scale ||
                zi < 2.0 * step * std::abs(z.d1(xi))) {
                throw ZeroCrossing(xi);
            }
        }
        auto integrand = [&z](double y) {
            const Complex zy = z(y);
            return 1.0 / (zy * zy);
        };
        return simpson(integrand, x0, x, 2048).value;
    };

    CFunction v;
    v.f = [z, w0, q](double x) { return z(x) * w0 * q(x); };
    // v' = z' w0 q + w0/z
    v.d1 = [z, w0, q](double x) { return z.d1(x) * w0 * q(x) + w0 / z(x); };
    // v'' = (V - eps) v, plus the quotient-rule residue which cancels exactly;
    // both z and v solve the same linear equation.
    v.d2 = [z, w0, q, V, epsilon](double x) {
        return (V(x) - epsilon) * z(x) * w0 * q(x);
    };
    return v;
}

double lambda0_from_params(double a, double b, double c, Complex w0) {
    const Complex w2 = w0 * w0;
    const double disc = b * b - 4.0 * a * c;
    const Complex lam0 = -w2 * disc / 4.0;
    const double scale = std::max(1.0, std::abs(lam0));
    if (std::abs(lam0.imag()) > 1e-12 * scale) {
        throw NonRealLambda0("w0^2 (b^2 - 4ac) has a non-real part");
    }
    return lam0.real();
}

double AlphaFunction::form(double x) const {
    const Complex zv = pair_->z(x);
    const Complex vv = pair_->v(x);
    return (params_.a * vv * vv + params_.b * vv * zv + params_.c * zv * zv)
        .real();
}

double AlphaFunction::form_d1(double x) const {
    const Complex z = pair_->z(x), dz = pair_->z.d1(x);
    const Complex v = pair_->v(x), dv = pair_->v.d1(x);
    return (2.0 * params_.a * v * dv + params_.b * (dv * z + v * dz) +
            2.0 * params_.c * z * dz)
        .real();
}

double AlphaFunction::form_d2(double x) const {
    const Complex z = pair_->z(x), dz = pair_->z.d1(x), d2z = pair_->z.d2(x);
    const Complex v = pair_->v(x), dv = pair_->v.d1(x), d2v = pair_->v.d2(x);
    return (2.0 * params_.a * (dv * dv + v * d2v) +
            params_.b * (d2v * z + 2.0 * dv * dz + v * d2z) +
            2.0 * params_.c * (dz * dz + z * d2z))
        .real();
}

double AlphaFunction::operator()(double x) const {
    return std::sqrt(form(x));
}

double AlphaFunction::d1(double x) const {
    return form_d1(x) / (2.0 * (*this)(x));
}

double AlphaFunction::d2(double x) const {
    const double al = (*this)(x);
    const double q1 = form_d1(x);
    return form_d2(x) / (2.0 * al) - q1 * q1 / (4.0 * al * al * al);
}

double AlphaFunction::d3(double x) const {
    // differentiate alpha'' = (V - eps) alpha + lambda0/alpha^3 once
    const double al = (*this)(x);
    const double M = pair_->V(x) - pair_->epsilon;
    return pair_->V.d1(x) * al + M * d1(x) -
           3.0 * params_.lambda0 * d1(x) / (al * al * al * al);
}

AlphaFunction build_alpha(const FundamentalPair& pair, double a, double b,
                          double c) {
    ErmakovParams p{a, b, c, lambda0_from_params(a, b, c, pair.w0)};
    AlphaFunction alpha(std::make_shared<FundamentalPair>(pair), p);

    // probe the form on 2048 uniform points plus the endpoints; it must be
    // real and strictly positive relative to its own magnitude scale (the
    // catalog forms span many orders, so a global max is the wrong yardstick)
    const int probes = 2048;
    const Interval dom = pair.domain;
    for (int i = 0; i <= probes + 1; ++i) {
        const double x =
            (i <= probes) ? dom.lo + dom.length() * i / probes : dom.hi;
        const Complex z = pair.z(x), v = pair.v(x);
        const Complex q = a * v * v + b * v * z + c * z * z;
        const double scale = std::abs(a) * std::norm(v) +
                             std::abs(b) * std::abs(v * z) +
                             std::abs(c) * std::norm(z);
        if (std::abs(q.imag()) > 1e-10 * std::max(1.0, scale)) {
            throw NotRealQuadraticForm(
                "quadratic form has an imaginary part at x = " +
                std::to_string(x));
        }
        if (q.real() < 1e-12 * scale) {
            throw NotPositive("quadratic form touches zero at x = " +
                                  std::to_string(x),
                              x);
        }
    }
    return alpha;
}

double ermakov_residual(const AlphaFunction& alpha, double x) {
    const double al = alpha(x);
    const double M = alpha.V()(x) - alpha.epsilon();
    return std::abs(alpha.d2(x) - M * al -
                    alpha.lambda0() / (al * al * al));
}

Complex j_invariant(const CFunction& u, const AlphaFunction& alpha, double x) {
    const Complex w = u.d1(x) * alpha(x) - u(x) * alpha.d1(x);
    const Complex ratio = u(x) / alpha(x);
    return w * w + alpha.lambda0() * ratio * ratio;
}

} // namespace esusy
