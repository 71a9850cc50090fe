#pragma once

#include "esusy/darboux.hpp"

namespace esusy {

enum class PeriodicVariant { Cos, Sin };

/// Free-particle partner, alpha^2 = cos(2kx) + gamma (or the sin variant,
/// which is the same potential translated by a quarter period and therefore
/// PT-symmetric about x = pi/(4k) instead of the origin). Period pi/k, no
/// bound states.
struct PeriodicFamily {
    double k;
    double lambda;
    double gamma_lambda; // sqrt(1 + lambda^2/k^2) > 1
    PeriodicVariant variant;
    AlphaFunction alpha;
    Superpotential beta;
    ComplexPotential potential;

    /// symmetry center of the PT transform for this variant
    double pt_center() const;
};

PeriodicFamily periodic(double k, double lambda,
                        PeriodicVariant variant = PeriodicVariant::Cos);

/// Free-particle partner at E = -kappa^2/4 < 0; alpha^2 = cosh(kappa x) +
/// theta. Poeschl-Teller-like complex potential with the single bound energy
/// eps = -kappa^2/4.
struct HyperbolicFamily {
    double kappa;
    double lambda;
    double theta_lambda; // sqrt(1 - 4 (lambda/kappa)^2) in [0, 1]
    double epsilon;      // -kappa^2/4
    AlphaFunction alpha;
    Superpotential beta;
    ComplexPotential potential;
    TransformationFunction u;
    MissingState bound_state; // psi_eps, L2-normalized
};

/// Requires kappa > 0 and 0 < |lambda| <= kappa/2 (throws LambdaOutOfRange).
HyperbolicFamily hyperbolic(double kappa, double lambda);

/// Normalization constant of the hyperbolic bound state,
/// c_eps = sqrt(lambda / (2 arctan[(kappa/2lambda)(1 - theta)])),
/// evaluated through a cancellation-free form; lambda = 0 returns the limit
/// sqrt(kappa/2).
double hyperbolic_c_eps(double kappa, double lambda);

/// theta = 0 special case: V = [1 + i sinh(kappa x)] V_PT with
/// V_PT = -kappa^2 / cosh^2(kappa x), plus its normalized bound state.
struct PoschlTellerSpecial {
    double kappa;
    ComplexPotential potential;
    std::function<Complex(double)> psi_eps; // (kappa/(pi cosh))^{1/2} e^{i atan tanh(kx/2)}
};
PoschlTellerSpecial poschl_teller_special(double kappa);

/// Bound energy of the real modified Poeschl-Teller well -kappa^2/cosh^2,
/// for comparison against the complex family's eps = -kappa^2/4.
double poschl_teller_real_bound_energy(double kappa);

/// Oscillator fundamental pair at factorization energy eps; closed forms for
/// eps = -1, Kummer-series forms otherwise (restricted to |x| <= 8 by the
/// series budget). The odd solution carries a -1/2 normalization so the pair
/// Wronskian is exactly -1/2.
FundamentalPair osc_fundamental(double epsilon);

/// alpha = e^{x^2/2} sqrt(a Erf^2 + b Erf + c) built on the eps = -1 pair.
/// The intrinsic Ermakov constant is lambda0 = (4ac - b^2)/pi; the family
/// uses lambda = +sqrt(lambda0). Spectrum: {-1} U {1, 3, 5, ...}.
struct OscillatorFamily {
    double a, b, c;
    double lambda;
    double epsilon; // -1
    AlphaFunction alpha;
    Superpotential beta;
    ComplexPotential potential;
    TransformationFunction u;
};

/// Requires a >= 0 and c > b^2/(4a) so alpha is zero-free (throws
/// ZeroCrossingRisk on violation, including the b -> -b mirror sets).
OscillatorFamily osc_family(double a, double b, double c);

/// Normalized Hermite-Gauss eigenstate, E_n = 2n + 1 (V = x^2 units).
/// n <= 30; throws OrderTooLarge beyond the recurrence budget.
SourceState oscillator_eigenstate(int n);

/// max over a symmetric grid of |conj(V(-x)) - V(x)|; ~0 iff PT-symmetric.
/// Throws AsymmetricDomain when the grid is not symmetric about 0.
double pt_defect(const ComplexPotential& V, double half_width, int n_points);

} // namespace esusy
