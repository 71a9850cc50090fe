#include "esusy/families.hpp"

#include <cmath>
#include <numbers>

#include "esusy/errors.hpp"
#include "esusy/special.hpp"

namespace esusy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

} // namespace

PeriodicFamily periodic(double k, double lambda, PeriodicVariant variant) {
    if (!(k > 0.0)) throw Error("periodic family requires k > 0");
    if (lambda == 0.0) {
        throw ZeroLambdaBranch("periodic family requires lambda != 0");
    }
    const double gamma = std::sqrt(1.0 + lambda * lambda / (k * k));
    const double eps = k * k;
    const Interval dom{-4.0 * kPi / k, 4.0 * kPi / k};

    FundamentalPair pair;
    pair.epsilon = eps;
    pair.V = zero_potential();
    pair.domain = dom;

    double a, b, c;
    if (variant == PeriodicVariant::Cos) {
        // z = e^{ikx}, v = e^{-ikx}; alpha^2 = cos(2kx) + gamma
        pair.z = {[k](double x) { return std::polar(1.0, k * x); },
                  [k](double x) { return Complex(0, k) * std::polar(1.0, k * x); },
                  [k](double x) { return -k * k * std::polar(1.0, k * x); }};
        pair.v = {[k](double x) { return std::polar(1.0, -k * x); },
                  [k](double x) { return Complex(0, -k) * std::polar(1.0, -k * x); },
                  [k](double x) { return -k * k * std::polar(1.0, -k * x); }};
        pair.w0 = Complex(0.0, -2.0 * k);
        a = 0.5;
        b = gamma;
        c = 0.5;
    } else {
        // z = cos(kx), v = sin(kx); alpha^2 = sin(2kx) + gamma
        pair.z = {[k](double x) { return Complex(std::cos(k * x), 0); },
                  [k](double x) { return Complex(-k * std::sin(k * x), 0); },
                  [k](double x) { return Complex(-k * k * std::cos(k * x), 0); }};
        pair.v = {[k](double x) { return Complex(std::sin(k * x), 0); },
                  [k](double x) { return Complex(k * std::cos(k * x), 0); },
                  [k](double x) { return Complex(-k * k * std::sin(k * x), 0); }};
        pair.w0 = Complex(k, 0.0);
        a = gamma;
        b = 2.0;
        c = gamma;
    }

    AlphaFunction alpha = build_alpha(pair, a, b, c);
    Superpotential bt = beta(alpha, lambda);
    ComplexPotential pot = darboux_potential(bt, "periodic");
    return {k,       lambda,        gamma,        variant,
            std::move(alpha), std::move(bt), std::move(pot)};
}

double PeriodicFamily::pt_center() const {
    return variant == PeriodicVariant::Cos ? 0.0 : kPi / (4.0 * k);
}

double hyperbolic_c_eps(double kappa, double lambda) {
    if (!(kappa > 0.0)) throw Error("hyperbolic family requires kappa > 0");
    const double l = std::abs(lambda);
    if (l > kappa / 2.0) {
        throw LambdaOutOfRange("|lambda| must lie in (0, kappa/2]");
    }
    if (l == 0.0) return std::sqrt(kappa / 2.0); // printed limit
    const double ratio = 2.0 * l / kappa;
    const double theta = std::sqrt((1.0 - ratio) * (1.0 + ratio));
    // (kappa/2l)(1 - theta) = (2l/kappa)/(1 + theta), cancellation-free
    const double arg = ratio / (1.0 + theta);
    return std::sqrt(l / (2.0 * std::atan(arg)));
}

HyperbolicFamily hyperbolic(double kappa, double lambda) {
    if (!(kappa > 0.0)) throw Error("hyperbolic family requires kappa > 0");
    const double l = std::abs(lambda);
    if (l == 0.0 || l > kappa / 2.0) {
        throw LambdaOutOfRange("|lambda| must lie in (0, kappa/2]");
    }
    const double ratio = 2.0 * l / kappa;
    const double theta = std::sqrt((1.0 - ratio) * (1.0 + ratio));
    const double eps = -kappa * kappa / 4.0;
    const Interval dom{-34.0 / kappa, 34.0 / kappa};

    // z = e^{-kappa x/2}, v = e^{+kappa x/2}, W(z, v) = kappa
    FundamentalPair pair;
    pair.epsilon = eps;
    pair.V = zero_potential();
    pair.domain = dom;
    const double hk = kappa / 2.0;
    pair.z = {[hk](double x) { return Complex(std::exp(-hk * x), 0); },
              [hk](double x) { return Complex(-hk * std::exp(-hk * x), 0); },
              [hk](double x) { return Complex(hk * hk * std::exp(-hk * x), 0); }};
    pair.v = {[hk](double x) { return Complex(std::exp(hk * x), 0); },
              [hk](double x) { return Complex(hk * std::exp(hk * x), 0); },
              [hk](double x) { return Complex(hk * hk * std::exp(hk * x), 0); }};
    pair.w0 = Complex(kappa, 0.0);

    AlphaFunction alpha = build_alpha(pair, 0.5, theta, 0.5);
    Superpotential bt = beta(alpha, lambda);
    ComplexPotential pot = darboux_potential(bt, "hyperbolic");
    TransformationFunction u = transformation_function(alpha, lambda, 0.0);
    MissingState bound = missing_state(u);
    return {kappa, lambda, theta,         eps,          std::move(alpha),
            std::move(bt),  std::move(pot), std::move(u), std::move(bound)};
}

PoschlTellerSpecial poschl_teller_special(double kappa) {
    if (!(kappa > 0.0)) throw Error("requires kappa > 0");
    HyperbolicFamily fam = hyperbolic(kappa, kappa / 2.0);
    auto psi = [kappa](double x) {
        const double amp = std::sqrt(kappa / (kPi * std::cosh(kappa * x)));
        return std::polar(amp, std::atan(std::tanh(kappa * x / 2.0)));
    };
    return {kappa, std::move(fam.potential), psi};
}

double poschl_teller_real_bound_energy(double kappa) {
    const double s = std::sqrt(5.0) - 1.0;
    return -kappa * kappa / 4.0 * s * s;
}

FundamentalPair osc_fundamental(double epsilon) {
    FundamentalPair pair;
    pair.epsilon = epsilon;
    pair.V = harmonic_potential();
    pair.w0 = Complex(-0.5, 0.0);

    if (epsilon == -1.0) {
        // closed forms; the odd solution carries the -1/2 scaling that makes
        // W(z, v) = -1/2 exactly
        pair.domain = {-12.0, 12.0};
        pair.z = {[](double x) { return Complex(std::exp(x * x / 2), 0); },
                  [](double x) { return Complex(x * std::exp(x * x / 2), 0); },
                  [](double x) {
                      return Complex((1 + x * x) * std::exp(x * x / 2), 0);
                  }};
        pair.v = {[](double x) {
                      return Complex(
                          -kSqrtPi / 4 * std::exp(x * x / 2) * special::erf(x),
                          0);
                  },
                  [](double x) {
                      return Complex(-kSqrtPi / 4 * x * std::exp(x * x / 2) *
                                             special::erf(x) -
                                         0.5 * std::exp(-x * x / 2),
                                     0);
                  },
                  [](double x) {
                      return Complex((1 + x * x) * (-kSqrtPi / 4) *
                                         std::exp(x * x / 2) * special::erf(x),
                                     0);
                  }};
        return pair;
    }

    // Kummer-series pair; the |zeta| <= 64 budget restricts the domain
    pair.domain = {-8.0, 8.0};
    const double A1 = (1.0 - epsilon) / 4.0;
    const double A3 = (3.0 - epsilon) / 4.0;
    pair.z = {[A1](double x) {
                  return Complex(special::hyp1f1(A1, 0.5, x * x) *
                                     std::exp(-x * x / 2),
                                 0);
              },
              [A1](double x) {
                  const double m0 = special::hyp1f1(A1, 0.5, x * x);
                  const double m1 = special::hyp1f1(A1 + 1, 1.5, x * x);
                  return Complex(x * (4 * A1 * m1 - m0) * std::exp(-x * x / 2),
                                 0);
              },
              [A1, epsilon](double x) {
                  const double m0 = special::hyp1f1(A1, 0.5, x * x);
                  return Complex((x * x - epsilon) * m0 * std::exp(-x * x / 2),
                                 0);
              }};
    pair.v = {[A3](double x) {
                  return Complex(-0.5 * x * special::hyp1f1(A3, 1.5, x * x) *
                                     std::exp(-x * x / 2),
                                 0);
              },
              [A3](double x) {
                  const double m0 = special::hyp1f1(A3, 1.5, x * x);
                  const double m1 = special::hyp1f1(A3 + 1, 2.5, x * x);
                  return Complex(-0.5 *
                                     ((1 - x * x) * m0 +
                                      4.0 / 3.0 * A3 * x * x * m1) *
                                     std::exp(-x * x / 2),
                                 0);
              },
              [A3, epsilon](double x) {
                  const double m0 = special::hyp1f1(A3, 1.5, x * x);
                  return Complex((x * x - epsilon) * (-0.5) * x * m0 *
                                     std::exp(-x * x / 2),
                                 0);
              }};
    return pair;
}

OscillatorFamily osc_family(double a, double b, double c) {
    if (!(a >= 0.0)) throw Error("oscillator family requires a >= 0");
    const double lam0 = (4.0 * a * c - b * b) / kPi;
    if (lam0 <= 0.0) {
        throw ZeroCrossingRisk(
            "need c > b^2/(4a): the Erf polynomial would touch zero (or the "
            "branch degenerates)");
    }
    const double lambda = std::sqrt(lam0);

    // printed parameters act on e^{x^2/2}{Erf, 1}; rewrite on the (z, v)
    // pair whose Wronskian is -1/2: Erf e^{x^2/2} = -(4/sqrt(pi)) v
    const double A = 16.0 * a / kPi;
    const double B = -4.0 * b / kSqrtPi;
    const double C = c;

    FundamentalPair pair = osc_fundamental(-1.0);
    AlphaFunction alpha = build_alpha(pair, A, B, C);
    Superpotential bt = beta(alpha, lambda);
    ComplexPotential pot = darboux_potential(bt, "oscillator");
    TransformationFunction u = transformation_function(alpha, lambda, 0.0);
    return {a,  b,  c,  lambda, -1.0, std::move(alpha), std::move(bt),
            std::move(pot), std::move(u)};
}

SourceState oscillator_eigenstate(int n) {
    if (n < 0 || n > 30) {
        throw OrderTooLarge("Hermite recurrence budget is n <= 30");
    }
    // 1/sqrt(2^n n! sqrt(pi))
    double norm = 1.0 / std::sqrt(kSqrtPi);
    for (int k = 1; k <= n; ++k) norm /= std::sqrt(2.0 * k);

    auto hermite = [n](double x) {
        double hm1 = 0.0, h = 1.0; // H_{n-1}, H_n ascending
        for (int k = 0; k < n; ++k) {
            const double next = 2.0 * x * h - 2.0 * k * hm1;
            hm1 = h;
            h = next;
        }
        return std::pair<double, double>(h, hm1);
    };
    auto f = [hermite, norm](double x) {
        return Complex(hermite(x).first * std::exp(-x * x / 2) * norm, 0);
    };
    auto d1 = [hermite, norm, n](double x) {
        auto [h, hm1] = hermite(x);
        return Complex((2.0 * n * hm1 - x * h) * std::exp(-x * x / 2) * norm,
                       0);
    };
    return {f, d1, 2.0 * n + 1.0};
}

double pt_defect(const ComplexPotential& V, double half_width, int n_points) {
    if (!(half_width > 0.0) || n_points < 2) {
        throw Error("pt_defect needs a positive symmetric window");
    }
    if (!V.domain().symmetric(1e-9 * std::max(1.0, std::abs(V.domain().hi)))) {
        throw AsymmetricDomain("potential domain is not symmetric about 0");
    }
    if (half_width > V.domain().hi) {
        throw AsymmetricDomain("window exceeds the potential domain");
    }
    double worst = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double x = -half_width + 2.0 * half_width * i / (n_points - 1);
        worst = std::max(worst, std::abs(std::conj(V(-x)) - V(x)));
    }
    return worst;
}

} // namespace esusy
