#pragma once

#include <functional>
#include <vector>

#include "esusy/functions.hpp"

namespace esusy {

struct QuadResult {
    Complex value{0.0, 0.0};
    double error = 0.0; // Richardson estimate |I_h - I_2h|/15
};

/// Composite Simpson over [a,b] with n uniform cells (midpoint sampling per
/// cell), plus a Richardson error estimate against the half-resolution rule.
QuadResult simpson(const std::function<Complex(double)>& f, double a, double b,
                   int cells);

double simpson_real(const std::function<double(double)>& f, double a, double b,
                    int cells);

/// Cumulative antiderivative table P(x) = \int_{x0}^x f, built once on a
/// uniform grid (Simpson per cell) and evaluated anywhere in the covered
/// interval with a one-cell Simpson correction. Used for the stationary
/// phase of the transformation function; f must be smooth.
class CumulativeIntegral {
  public:
    CumulativeIntegral() = default;
    CumulativeIntegral(std::function<double(double)> f, Interval domain,
                       double x0, int cells = 4096);

    double operator()(double x) const;
    double origin() const { return x0_; }
    /// Richardson estimate of the worst-case table error.
    double error_estimate() const { return err_; }
    const Interval& domain() const { return dom_; }

  private:
    std::function<double(double)> f_;
    Interval dom_{};
    double x0_ = 0.0;
    double h_ = 0.0;
    double err_ = 0.0;
    std::vector<double> prefix_; // antiderivative at the grid nodes
};

} // namespace esusy
