#pragma once

#include <vector>

#include "esusy/darboux.hpp"

namespace esusy {

struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0; // point count including endpoints, n >= 3

    double spacing() const { return (x_max - x_min) / (n - 1); }
    double point(int i) const { return x_min + i * spacing(); }
};

/// Second-order central-difference matrix over the interior grid points with
/// Dirichlet ends: (-psi_{i-1} + 2 psi_i - psi_{i+1})/h^2 + Vt(x_i) psi_i.
/// Off-diagonals are real; non-normality enters only through Im(diagonal).
class DiscreteHamiltonian {
  public:
    int dim() const { return static_cast<int>(diag_.size()); }
    Complex diagonal(int i) const { return diag_[i]; }
    double offdiagonal() const { return off_; }
    const Grid& grid() const { return grid_; }
    double interior_point(int i) const { return grid_.point(i + 1); }
    const std::string& potential_tag() const { return tag_; }

    std::vector<Complex> dense() const; // column-major dim x dim

  private:
    friend DiscreteHamiltonian discretize(const ComplexPotential&,
                                          const Grid&);
    friend DiscreteHamiltonian discretize_real(const RealPotential&,
                                               const Grid&, std::string);
    DiscreteHamiltonian(Grid g, std::vector<Complex> d, double off,
                        std::string tag)
        : grid_(g), diag_(std::move(d)), off_(off), tag_(std::move(tag)) {}

    Grid grid_;
    std::vector<Complex> diag_;
    double off_;
    std::string tag_;
};

/// Throws NonFinitePotential (with the offending index) and Error for grids
/// without interior structure (n < 3).
DiscreteHamiltonian discretize(const ComplexPotential& V, const Grid& grid);
DiscreteHamiltonian discretize_real(const RealPotential& V, const Grid& grid,
                                    std::string tag = "");

struct ReferenceMatch {
    double expected;
    Complex found;
    double abs_error;
};

struct SpectralReport {
    std::vector<Complex> eigenvalues; // all of them, sorted by real part
    int m = 0;                        // how many low modes were examined
    double max_imag_low_m = 0.0;
    std::vector<ReferenceMatch> matched;
    double tolerance = 0.0;
};

/// Full eigenvalue set of the complex non-symmetric matrix (LAPACK zgeev:
/// Hessenberg reduction + shifted QR). Reports the lowest m by real part and
/// matches them against the reference energies when given.
/// Throws EigenNoConvergence on QR failure.
SpectralReport spectrum(const DiscreteHamiltonian& H, int m,
                        const std::vector<double>& reference = {},
                        double tolerance = 0.0);

/// Lowest-by-real-part eigenpair, for eigenvector cross-checks.
std::pair<Complex, std::vector<Complex>>
lowest_eigenpair(const DiscreteHamiltonian& H);

/// Milne counting integral N = (lambda/pi) \int alpha^-2 over the grid with
/// an exponential tail estimate added on unbounded-decay integrands.
double milne_count(const AlphaFunction& alpha, double lambda, const Grid& grid);

/// Composite Simpson over the grid span with Richardson error estimate.
QuadResult integrate(const std::function<Complex(double)>& f, const Grid& grid);

} // namespace esusy
