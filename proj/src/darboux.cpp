#include "esusy/darboux.hpp"

#include <cmath>
#include <limits>

#include "esusy/errors.hpp"

namespace esusy {

Complex ComplexPotential::operator()(double x) const {
    return beta_.V()(x) + 2.0 * beta_.d1(x);
}

Complex ComplexPotential::d1(double x) const {
    return beta_.V().d1(x) + 2.0 * beta_.d2(x);
}

ComplexPotential darboux_potential(const Superpotential& b,
                                   std::string family_tag) {
    return ComplexPotential(b, std::move(family_tag));
}

Complex ladder_apply(Ladder which, const Superpotential& b, Complex psi,
                     Complex dpsi, double x) {
    const Complex bx = b(x);
    switch (which) {
    case Ladder::A:
        return -dpsi + bx * psi;
    case Ladder::B:
        return dpsi + bx * psi;
    case Ladder::Adag:
        return dpsi + std::conj(bx) * psi;
    case Ladder::Bdag:
        return -dpsi + std::conj(bx) * psi;
    }
    return {};
}

// ---- partner states -------------------------------------------------------

Complex PartnerWave::beta_eff(double x) const {
    const Complex b = beta_(x);
    return dual_ ? std::conj(b) : b;
}
Complex PartnerWave::beta_eff_d1(double x) const {
    const Complex b = beta_.d1(x);
    return dual_ ? std::conj(b) : b;
}
Complex PartnerWave::beta_eff_d2(double x) const {
    const Complex b = beta_.d2(x);
    return dual_ ? std::conj(b) : b;
}

Complex PartnerWave::operator()(double x) const {
    return norm_ * (src_.d1(x) + beta_eff(x) * src_.f(x));
}

Complex PartnerWave::d1(double x) const {
    const Complex psi = src_.f(x);
    const Complex dpsi = src_.d1(x);
    const Complex d2psi = (beta_.V()(x) - src_.E) * psi;
    return norm_ * (d2psi + beta_eff_d1(x) * psi + beta_eff(x) * dpsi);
}

Complex PartnerWave::d2(double x) const {
    const double V = beta_.V()(x), dV = beta_.V().d1(x);
    const Complex psi = src_.f(x);
    const Complex dpsi = src_.d1(x);
    const Complex d2psi = (V - src_.E) * psi;
    const Complex d3psi = dV * psi + (V - src_.E) * dpsi;
    return norm_ * (d3psi + beta_eff_d2(x) * psi + 2.0 * beta_eff_d1(x) * dpsi +
                    beta_eff(x) * d2psi);
}

Complex PartnerWave::d3(double x) const {
    const double V = beta_.V()(x), dV = beta_.V().d1(x), d2V = beta_.V().d2(x);
    const Complex psi = src_.f(x);
    const Complex dpsi = src_.d1(x);
    const Complex d2psi = (V - src_.E) * psi;
    const Complex d3psi = dV * psi + (V - src_.E) * dpsi;
    const Complex d4psi = d2V * psi + 2.0 * dV * dpsi + (V - src_.E) * d2psi;
    // beta''' from differentiating 2 beta beta' - V'
    const Complex b = beta_eff(x), b1 = beta_eff_d1(x), b2 = beta_eff_d2(x);
    const Complex b3 = 2.0 * (b1 * b1 + b * b2) - d2V;
    return norm_ * (d4psi + b3 * psi + 3.0 * b2 * dpsi + 3.0 * b1 * d2psi +
                    b * d3psi);
}

PartnerWave partner_state(const SourceState& psi, const Superpotential& b,
                          bool dual) {
    const double gap = psi.E - b.epsilon();
    if (gap <= 0.0) {
        throw EnergyBelowFactorization(
            "E must exceed the factorization energy");
    }
    return PartnerWave(psi, b, dual, 1.0 / std::sqrt(gap));
}

BiorthogonalState make_biorthogonal(const SourceState& psi,
                                    const Superpotential& b) {
    return {psi.E, partner_state(psi, b, false), partner_state(psi, b, true)};
}

// ---- operator identities --------------------------------------------------

double factorization_residual(const Superpotential& b, const SourceState& psi,
                              double x) {
    const Complex p = psi.f(x);
    const Complex dp = psi.d1(x);
    const double V = b.V()(x);
    const Complex d2p = (V - psi.E) * p;
    const Complex bx = b(x);
    // A(B psi) = -(B psi)' + beta (B psi)
    const Complex g = dp + bx * p;
    const Complex dg = d2p + b.d1(x) * p + bx * dp;
    const Complex ab = -dg + bx * g;
    const Complex h = -d2p + b.V()(x) * p; // H psi
    return std::abs(ab + b.epsilon() * p - h);
}

double intertwining_residual(const Superpotential& b,
                             const ComplexPotential& Vt,
                             const SourceState& psi, double x) {
    const double V = b.V()(x), dV = b.V().d1(x);
    const Complex p = psi.f(x);
    const Complex dp = psi.d1(x);
    const Complex d2p = (V - psi.E) * p;
    const Complex d3p = dV * p + (V - psi.E) * dp;

    // g = B psi
    const Complex g = dp + b(x) * p;
    const Complex d2g = d3p + b.d2(x) * p + 2.0 * b.d1(x) * dp + b(x) * d2p;
    const Complex lhs = -d2g + Vt(x) * g;

    // B (H psi), with H psi = -psi'' + V psi and (H psi)' chained
    const Complex h = -d2p + V * p;
    const Complex dh = -d3p + dV * p + V * dp;
    const Complex rhs = dh + b(x) * h;

    return std::abs(lhs - rhs);
}

double adjoint_intertwining_residual(const Superpotential& b,
                                     const ComplexPotential& Vt,
                                     const SourceState& psi, double x) {
    const PartnerWave phi = partner_state(psi, b, /*dual=*/true);
    const double V = b.V()(x);
    const Complex bs = std::conj(b(x));
    const Complex bs1 = std::conj(b.d1(x));
    const Complex bs2 = std::conj(b.d2(x));

    // g = Bdag phi = -phi' + beta* phi
    const Complex g = -phi.d1(x) + bs * phi(x);
    const Complex d2g = -phi.d3(x) + bs2 * phi(x) + 2.0 * bs1 * phi.d1(x) +
                        bs * phi.d2(x);
    const Complex lhs = -d2g + V * g;

    // h = (-d2 + Vt*) phi
    const Complex vt = std::conj(Vt(x));
    const Complex dvt = std::conj(Vt.d1(x));
    const Complex h = -phi.d2(x) + vt * phi(x);
    const Complex dh = -phi.d3(x) + dvt * phi(x) + vt * phi.d1(x);
    const Complex rhs = -dh + bs * h;

    return std::abs(lhs - rhs);
}

// ---- missing state --------------------------------------------------------

Complex MissingState::operator()(double x) const { return c_ / u_(x); }

Complex MissingState::d1(double x) const {
    const Complex u = u_(x);
    return -c_ * u_.d1(x) / (u * u);
}

double MissingState::density(double x) const {
    return std::norm(c_) / u_.density(x);
}

namespace {

// exponential-envelope tail estimate for \int f past the edge:
// f * (decay length), with the decay length from the log derivative of alpha
double edge_tail(const AlphaFunction& alpha, double x) {
    const double al = alpha(x);
    const double slope = std::abs(alpha.d1(x));
    if (slope < 1e-300) return std::numeric_limits<double>::infinity();
    const double ell = al / (2.0 * slope);
    return ell / (al * al); // f(edge) * ell with f = alpha^-2
}

} // namespace

MissingState missing_state(const TransformationFunction& u, int cells) {
    const AlphaFunction& alpha = u.alpha();
    const Interval dom = alpha.domain();
    auto rho1 = [&alpha](double x) {
        const double a = alpha(x);
        return Complex(1.0 / (a * a), 0.0); // density with c = 1
    };
    const QuadResult q = simpson(rho1, dom.lo, dom.hi, cells);
    const double tail = edge_tail(alpha, dom.lo) + edge_tail(alpha, dom.hi);
    const double total = q.value.real();
    const bool ok = std::isfinite(tail) && tail < 1e-6 * total;
    const Complex c = ok ? Complex(1.0 / std::sqrt(total), 0.0)
                         : Complex(1.0, 0.0);
    return MissingState(u, c, ok, total, tail);
}

MissingPair binormalized_missing_state(const TransformationFunction& u,
                                       int cells) {
    const Interval dom = u.alpha().domain();
    auto inv_u_sq = [&u](double x) {
        const Complex ux = u(x);
        return 1.0 / (ux * ux);
    };
    const QuadResult q = simpson(inv_u_sq, dom.lo, dom.hi, cells);
    if (q.error > 1e-8 * (std::abs(q.value) + 1.0)) {
        throw QuadratureFailure("binorm integral did not converge", q.error);
    }
    const Complex C = 1.0 / std::sqrt(q.value); // principal branch
    auto tilde = [C, u](double x) { return C / u(x); };
    auto bar = [C, u](double x) { return std::conj(C / u(x)); };
    return {tilde, bar, C, q.value};
}

QuadResult biproduct(const std::function<Complex(double)>& f,
                     const std::function<Complex(double)>& g, double a,
                     double b, int cells) {
    auto integrand = [&f, &g](double x) { return std::conj(f(x)) * g(x); };
    return simpson(integrand, a, b, cells);
}

} // namespace esusy
