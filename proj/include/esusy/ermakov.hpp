#pragma once

#include <memory>

#include "esusy/functions.hpp"

namespace esusy {

/// Two linearly independent solutions (z, v) of -u'' + (V - eps) u = 0 with
/// constant Wronskian w0 = z v' - z' v. The catalog constructors supply all
/// derivatives in closed form.
struct FundamentalPair {
    CFunction z;
    CFunction v;
    Complex w0{0.0, 0.0};
    double epsilon = 0.0;
    RealPotential V;
    Interval domain;

    Complex wronskian(double x) const {
        return z(x) * v.d1(x) - z.d1(x) * v(x);
    }
    Complex schrodinger_residual_z(double x) const {
        return -z.d2(x) + (V(x) - epsilon) * z(x);
    }
    Complex schrodinger_residual_v(double x) const {
        return -v.d2(x) + (V(x) - epsilon) * v(x);
    }
};

struct ErmakovParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double lambda0 = 0.0; // derived: -w0^2 (b^2 - 4ac)/4
};

/// v(x) = z(x) w0 \int_{x0}^x z^{-2}, the reduction-of-order second solution.
/// Throws ZeroCrossing if z vanishes on the path.
CFunction second_solution(const CFunction& z, Complex w0, double x0,
                          const RealPotential& V, double epsilon);

/// lambda0 = -w0^2 (b^2 - 4ac)/4; requires w0^2 real (the catalog pairs have
/// w0 purely real or purely imaginary). Throws NonRealLambda0 otherwise.
double lambda0_from_params(double a, double b, double c, Complex w0);

/// Positive Ermakov amplitude alpha = sqrt(a v^2 + b v z + c z^2) with
/// derivatives chained from the pair. The third derivative follows from the
/// Ermakov equation itself and needs V'.
class AlphaFunction {
  public:
    double operator()(double x) const;
    double d1(double x) const;
    double d2(double x) const;
    double d3(double x) const;

    const ErmakovParams& params() const { return params_; }
    double lambda0() const { return params_.lambda0; }
    const FundamentalPair& pair() const { return *pair_; }
    const Interval& domain() const { return pair_->domain; }
    double epsilon() const { return pair_->epsilon; }
    const RealPotential& V() const { return pair_->V; }

  private:
    friend AlphaFunction build_alpha(const FundamentalPair&, double, double,
                                     double);
    AlphaFunction(std::shared_ptr<const FundamentalPair> pair,
                  ErmakovParams params)
        : pair_(std::move(pair)), params_(params) {}

    // quadratic form a v^2 + b v z + c z^2 and its first two derivatives
    double form(double x) const;
    double form_d1(double x) const;
    double form_d2(double x) const;

    std::shared_ptr<const FundamentalPair> pair_;
    ErmakovParams params_;
};

/// Validates the quadratic form on a dense probe (2048 points + endpoints):
/// it must be real and strictly positive relative to its local magnitude
/// scale. Throws NotRealQuadraticForm / NotPositive.
AlphaFunction build_alpha(const FundamentalPair& pair, double a, double b,
                          double c);

/// |alpha'' - (V - eps) alpha - lambda0/alpha^3| at x.
double ermakov_residual(const AlphaFunction& alpha, double x);

/// J/j0 = (u' alpha - u alpha')^2 + lambda0 (u/alpha)^2, x-independent for
/// any solution u of the paired linear equation (j0 = 1 convention).
Complex j_invariant(const CFunction& u, const AlphaFunction& alpha, double x);

} // namespace esusy
