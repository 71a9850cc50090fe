#pragma once

#include <complex>
#include <functional>

namespace esusy {

using Complex = std::complex<double>;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
    bool symmetric(double tol = 1e-12) const { return std::abs(lo + hi) <= tol; }
};

/// Complex-valued function of a real variable with analytic derivatives.
/// All catalog functions supply closed-form d1/d2; nothing here is ever
/// differenced numerically.
struct CFunction {
    std::function<Complex(double)> f;
    std::function<Complex(double)> d1;
    std::function<Complex(double)> d2;
    Complex operator()(double x) const { return f(x); }
};

/// Real potential with first and second derivatives (needed by the
/// derivative chains of the Darboux operators).
struct RealPotential {
    std::function<double(double)> v;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    double operator()(double x) const { return v(x); }
};

inline RealPotential zero_potential() {
    auto z = [](double) { return 0.0; };
    return {z, z, z};
}

inline RealPotential harmonic_potential() {
    return {[](double x) { return x * x; },
            [](double x) { return 2.0 * x; },
            [](double) { return 2.0; }};
}

/// Source eigenstate psi_E (real energy, possibly complex-valued) with
/// analytic first derivative. Higher derivatives follow from the source
/// Schroedinger equation.
struct SourceState {
    std::function<Complex(double)> f;
    std::function<Complex(double)> d1;
    double E = 0.0;
};

} // namespace esusy
