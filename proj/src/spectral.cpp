#include "esusy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "esusy/errors.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace esusy {

namespace {

std::vector<Complex> assemble_diag(const Grid& grid,
                                   const std::function<Complex(double)>& V) {
    if (grid.n < 3) {
        throw Error("grid has no interior structure (n < 3)");
    }
    const double h = grid.spacing();
    const int dim = grid.n - 2;
    std::vector<Complex> diag(dim);
    for (int i = 0; i < dim; ++i) {
        const Complex vi = V(grid.point(i + 1));
        if (!std::isfinite(vi.real()) || !std::isfinite(vi.imag())) {
            throw NonFinitePotential("potential not finite at grid index " +
                                         std::to_string(i + 1),
                                     i + 1);
        }
        diag[i] = 2.0 / (h * h) + vi;
    }
    return diag;
}

std::vector<Complex> zgeev_values(std::vector<Complex> A, int n,
                                  std::vector<Complex>* right_vectors) {
    std::vector<Complex> w(n);
    std::vector<Complex> vr(right_vectors ? static_cast<size_t>(n) * n : 1);
    const int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', right_vectors ? 'V' : 'N', n, A.data(), n,
        w.data(), nullptr, n, vr.data(), n);
    if (info > 0) {
        throw EigenNoConvergence("QR iteration failed to converge; " +
                                 std::to_string(info) +
                                 " eigenvalues unresolved");
    }
    if (info < 0) {
        throw Error("zgeev: illegal argument " + std::to_string(-info));
    }
    if (right_vectors) *right_vectors = std::move(vr);
    return w;
}

} // namespace

std::vector<Complex> DiscreteHamiltonian::dense() const {
    const int n = dim();
    std::vector<Complex> A(static_cast<size_t>(n) * n, Complex(0, 0));
    for (int i = 0; i < n; ++i) {
        A[static_cast<size_t>(i) * n + i] = diag_[i];
        if (i + 1 < n) {
            A[static_cast<size_t>(i) * n + i + 1] = off_;     // sub
            A[static_cast<size_t>(i + 1) * n + i] = off_;     // super
        }
    }
    return A;
}

DiscreteHamiltonian discretize(const ComplexPotential& V, const Grid& grid) {
    auto diag = assemble_diag(grid, [&V](double x) { return V(x); });
    const double h = grid.spacing();
    return DiscreteHamiltonian(grid, std::move(diag), -1.0 / (h * h),
                               V.family_tag());
}

DiscreteHamiltonian discretize_real(const RealPotential& V, const Grid& grid,
                                    std::string tag) {
    auto diag =
        assemble_diag(grid, [&V](double x) { return Complex(V(x), 0.0); });
    const double h = grid.spacing();
    return DiscreteHamiltonian(grid, std::move(diag), -1.0 / (h * h),
                               std::move(tag));
}

SpectralReport spectrum(const DiscreteHamiltonian& H, int m,
                        const std::vector<double>& reference,
                        double tolerance) {
    std::vector<Complex> w = zgeev_values(H.dense(), H.dim(), nullptr);
    std::sort(w.begin(), w.end(), [](const Complex& a, const Complex& b) {
        return a.real() < b.real();
    });
    SpectralReport rep;
    rep.m = std::min<int>(m, static_cast<int>(w.size()));
    rep.tolerance = tolerance;
    rep.max_imag_low_m = 0.0;
    for (int i = 0; i < rep.m; ++i) {
        rep.max_imag_low_m = std::max(rep.max_imag_low_m,
                                      std::abs(w[i].imag()));
    }
    for (std::size_t k = 0; k < reference.size() && k < w.size(); ++k) {
        rep.matched.push_back(
            {reference[k], w[k], std::abs(w[k] - reference[k])});
    }
    rep.eigenvalues = std::move(w);
    return rep;
}

std::pair<Complex, std::vector<Complex>>
lowest_eigenpair(const DiscreteHamiltonian& H) {
    std::vector<Complex> vr;
    const int n = H.dim();
    std::vector<Complex> w = zgeev_values(H.dense(), n, &vr);
    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (w[i].real() < w[best].real()) best = i;
    }
    std::vector<Complex> vec(n);
    for (int i = 0; i < n; ++i) {
        vec[i] = vr[static_cast<size_t>(best) * n + i];
    }
    return {w[best], std::move(vec)};
}

double milne_count(const AlphaFunction& alpha, double lambda,
                   const Grid& grid) {
    if (lambda == 0.0) return 0.0;
    auto f = [&alpha](double x) {
        const double a = alpha(x);
        return Complex(1.0 / (a * a), 0.0);
    };
    const int cells = std::max(grid.n - 1, 512);
    const QuadResult q = simpson(f, grid.x_min, grid.x_max, cells);
    if (q.error > 1e-6 * (std::abs(q.value) + 1.0)) {
        throw QuadratureFailure("Milne integral did not converge", q.error);
    }
    // exponential-envelope tail estimate past the grid edges
    double tail = 0.0;
    for (double edge : {grid.x_min, grid.x_max}) {
        const double al = alpha(edge);
        const double slope = std::abs(alpha.d1(edge));
        if (slope > 1e-300) {
            const double ell = al / (2.0 * slope);
            const double t = ell / (al * al);
            if (t < 0.1 * q.value.real()) tail += t;
        }
    }
    return lambda / std::numbers::pi * (q.value.real() + tail);
}

QuadResult integrate(const std::function<Complex(double)>& f,
                     const Grid& grid) {
    if (grid.n < 3) throw Error("integration grid needs n >= 3");
    for (int i = 0; i < grid.n; ++i) {
        const Complex v = f(grid.point(i));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw QuadratureFailure("integrand not finite at x = " +
                                        std::to_string(grid.point(i)),
                                    std::numeric_limits<double>::infinity());
        }
    }
    return simpson(f, grid.x_min, grid.x_max, grid.n - 1);
}

} // namespace esusy
