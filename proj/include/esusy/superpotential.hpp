#pragma once

#include "esusy/ermakov.hpp"
#include "esusy/quadrature.hpp"

namespace esusy {

enum class Branch { Conventional, Excluded, Complex };

/// lambda0 = 0 -> Conventional, lambda0 < 0 -> Excluded, lambda0 > 0 -> Complex.
Branch classify(double lambda0);

/// beta(x) = -alpha'/alpha + i lambda/alpha^2, the complex solution of
/// -beta' + beta^2 + eps - V = 0. Immutable; all derivatives analytic.
class Superpotential {
  public:
    Complex operator()(double x) const;
    Complex d1(double x) const;
    /// beta'' from the differentiated Riccati equation, 2 beta beta' - V'.
    Complex d2(double x) const;

    double beta_R(double x) const;
    double beta_I(double x) const;

    double lambda() const { return lambda_; }
    double epsilon() const { return alpha_.epsilon(); }
    const RealPotential& V() const { return alpha_.V(); }
    const AlphaFunction& alpha() const { return alpha_; }
    const Interval& domain() const { return alpha_.domain(); }

  private:
    friend Superpotential beta(const AlphaFunction&, double);
    Superpotential(AlphaFunction a, double lambda)
        : alpha_(std::move(a)), lambda_(lambda) {}

    AlphaFunction alpha_;
    double lambda_;
};

/// Requires lambda^2 = lambda0 of alpha and lambda != 0 (the complex branch).
/// Throws LambdaMismatch / ZeroLambdaBranch.
Superpotential beta(const AlphaFunction& alpha, double lambda);

/// Degenerate lambda = 0 path: the real superpotential -alpha'/alpha used by
/// conventional SUSY. Kept only as a consistency check against the lambda->0
/// limit of the complex branch.
struct ConventionalSuperpotential {
    AlphaFunction alpha;
    double operator()(double x) const { return -alpha.d1(x) / alpha(x); }
};
ConventionalSuperpotential beta_conventional(const AlphaFunction& alpha);

/// |-beta' + beta^2 + eps - V| at x.
double riccati_residual(const Superpotential& b, double x);

struct Hydrodynamics {
    double rho;      // alpha^2
    double velocity; // -2 beta_I
    double current;  // velocity * rho = -2 lambda, exactly constant
};
Hydrodynamics hydrodynamics(const Superpotential& b, double x);

/// u_lambda(x) = alpha exp[-i lambda \int_{x0}^x alpha^-2], |u|^2 = alpha^2.
/// The phase integral is cached on a 4096-cell grid at construction.
class TransformationFunction {
  public:
    Complex operator()(double x) const;
    Complex d1(double x) const;
    Complex d2(double x) const; // (alpha'' - lambda^2/alpha^3) e^{i Xi}

    /// Accumulated phase Xi(x) = -lambda \int_{x0}^x alpha^-2.
    double phase(double x) const;
    double density(double x) const; // |u|^2 = alpha^2

    const AlphaFunction& alpha() const { return alpha_; }
    double lambda() const { return lambda_; }
    double origin() const { return phase_.origin(); }
    double phase_error() const { return lambda_ == 0.0 ? 0.0 : std::abs(lambda_) * phase_.error_estimate(); }

  private:
    friend TransformationFunction transformation_function(const AlphaFunction&,
                                                          double, double);
    TransformationFunction(AlphaFunction a, double lambda,
                           CumulativeIntegral phase)
        : alpha_(std::move(a)), lambda_(lambda), phase_(std::move(phase)) {}

    AlphaFunction alpha_;
    double lambda_;
    CumulativeIntegral phase_; // \int_{x0}^x alpha^-2
};

/// Throws QuadratureFailure if the cached phase table cannot reach 1e-10.
TransformationFunction transformation_function(const AlphaFunction& alpha,
                                               double lambda, double x0);

} // namespace esusy
