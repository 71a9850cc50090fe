#pragma once

namespace esusy::special {

/// Error function, series below |x| = 2 and a Lentz continued fraction for
/// the complementary function above. Absolute error below 1e-14.
double erf(double x);

/// Kummer confluent hypergeometric 1F1(a; c; zeta) by direct series with
/// term-ratio stopping and compensated summation. Negative arguments are
/// routed through the Kummer transformation to keep the series
/// positive-term. Relative error ~1e-12 inside the |zeta| <= 64 budget.
/// Throws SeriesNonConvergence beyond the budget or if c is a non-positive
/// integer (unless the series terminates first).
double hyp1f1(double a, double c, double zeta);

} // namespace esusy::special
