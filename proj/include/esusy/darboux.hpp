#pragma once

#include <string>
#include <vector>

#include "esusy/superpotential.hpp"

namespace esusy {

/// Darboux partner potential Vt = V + 2 beta', complex-valued with
/// Im Vt = -4 lambda alpha'/alpha^3 and Re Vt = V - 2 (ln alpha)''.
class ComplexPotential {
  public:
    Complex operator()(double x) const;
    Complex d1(double x) const; // V' + 2 beta''
    double re(double x) const { return (*this)(x).real(); }
    double im(double x) const { return (*this)(x).imag(); }

    const Superpotential& superpotential() const { return beta_; }
    const RealPotential& source() const { return beta_.V(); }
    double epsilon() const { return beta_.epsilon(); }
    double lambda() const { return beta_.lambda(); }
    const Interval& domain() const { return beta_.domain(); }
    const std::string& family_tag() const { return tag_; }

  private:
    friend ComplexPotential darboux_potential(const Superpotential&,
                                              std::string);
    ComplexPotential(Superpotential b, std::string tag)
        : beta_(std::move(b)), tag_(std::move(tag)) {}

    Superpotential beta_;
    std::string tag_;
};

ComplexPotential darboux_potential(const Superpotential& b,
                                   std::string family_tag = "");

enum class Ladder { A, B, Adag, Bdag };

/// A = -d/dx + beta, B = d/dx + beta; adjoints under the L2 pairing are
/// Adag = d/dx + beta*, Bdag = -d/dx + beta*.
Complex ladder_apply(Ladder which, const Superpotential& b, Complex psi,
                     Complex dpsi, double x);

/// Intertwined state psi~_E = (psi' + beta psi)/sqrt(E - eps) or its dual
/// psi-bar_E = (psi' + beta* psi)/sqrt(E - eps). Derivatives up to third
/// order chain through the source Schroedinger equation.
class PartnerWave {
  public:
    Complex operator()(double x) const;
    Complex d1(double x) const;
    Complex d2(double x) const;
    Complex d3(double x) const;
    double energy() const { return src_.E; }
    bool dual() const { return dual_; }

  private:
    friend PartnerWave partner_state(const SourceState&, const Superpotential&,
                                     bool);
    PartnerWave(SourceState s, Superpotential b, bool dual, double norm)
        : src_(std::move(s)), beta_(std::move(b)), dual_(dual), norm_(norm) {}

    Complex beta_eff(double x) const;
    Complex beta_eff_d1(double x) const;
    Complex beta_eff_d2(double x) const;

    SourceState src_;
    Superpotential beta_;
    bool dual_;
    double norm_; // 1/sqrt(E - eps)
};

/// Throws EnergyBelowFactorization if E <= eps.
PartnerWave partner_state(const SourceState& psi, const Superpotential& b,
                          bool dual);

struct BiorthogonalState {
    double E;
    PartnerWave psi_tilde;
    PartnerWave psi_bar;
};
BiorthogonalState make_biorthogonal(const SourceState& psi,
                                    const Superpotential& b);

/// |(AB + eps) psi - H psi| at x; zero whenever beta solves the Riccati
/// equation of the source problem.
double factorization_residual(const Superpotential& b, const SourceState& psi,
                              double x);

/// |(-d2 + Vt) B psi - B (-d2 + V) psi| at x for a source solution psi.
double intertwining_residual(const Superpotential& b,
                             const ComplexPotential& Vt,
                             const SourceState& psi, double x);

/// Second intertwining (adjoint pair): |(-d2 + V) Bdag phi - Bdag (-d2 + Vt*) phi|
/// evaluated on phi = psi-bar_E.
double adjoint_intertwining_residual(const Superpotential& b,
                                     const ComplexPotential& Vt,
                                     const SourceState& psi, double x);

/// Missing state psi~_eps = c_eps / u_lambda, annihilated by A. c_eps is the
/// real positive L2-normalizing constant when the state is normalizable
/// (gauge choice); otherwise c_eps = 1 and normalizable = false.
class MissingState {
  public:
    Complex operator()(double x) const;
    Complex d1(double x) const;
    double density(double x) const; // |c|^2/alpha^2

    double epsilon() const { return u_.alpha().epsilon(); }
    Complex c_eps() const { return c_; }
    bool normalizable() const { return normalizable_; }
    double norm_integral() const { return norm_integral_; }
    double tail_bound() const { return tail_; }
    const TransformationFunction& u() const { return u_; }

  private:
    friend MissingState missing_state(const TransformationFunction&, int);
    MissingState(TransformationFunction u, Complex c, bool ok, double nrm,
                 double tail)
        : u_(std::move(u)), c_(c), normalizable_(ok), norm_integral_(nrm),
          tail_(tail) {}

    TransformationFunction u_;
    Complex c_;
    bool normalizable_;
    double norm_integral_; // \int |psi|^2 with c = 1
    double tail_;
};

MissingState missing_state(const TransformationFunction& u, int cells = 8192);

/// The bi-orthonormal missing pair: psi~_eps = C/u with C^2 \int u^-2 = 1 so
/// that the bi-product <psi-bar_eps|psi~_eps> equals one. C is complex when
/// \int u^-2 is (broken-PT parameter sets); the dual stays conj(psi~_eps).
struct MissingPair {
    std::function<Complex(double)> psi_tilde;
    std::function<Complex(double)> psi_bar;
    Complex c;              // binormalizing constant
    Complex binorm_squared; // \int u^-2 dx used to fix C
};
MissingPair binormalized_missing_state(const TransformationFunction& u,
                                       int cells = 8192);

/// \int conj(f) g over [a,b] with a Richardson error estimate.
QuadResult biproduct(const std::function<Complex(double)>& f,
                     const std::function<Complex(double)>& g, double a,
                     double b, int cells = 4096);

} // namespace esusy
