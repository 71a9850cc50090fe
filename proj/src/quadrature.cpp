#include "esusy/quadrature.hpp"

#include <cmath>

#include "esusy/errors.hpp"

namespace esusy {

namespace {

// one Simpson panel over [x0, x1] with midpoint evaluation
inline Complex panel(const std::function<Complex(double)>& f, double x0,
                     double x1) {
    const double m = 0.5 * (x0 + x1);
    return (x1 - x0) / 6.0 * (f(x0) + 4.0 * f(m) + f(x1));
}

Complex composite(const std::function<Complex(double)>& f, double a, double b,
                  int cells) {
    const double h = (b - a) / cells;
    Complex sum{0.0, 0.0};
    for (int i = 0; i < cells; ++i) {
        sum += panel(f, a + i * h, a + (i + 1) * h);
    }
    return sum;
}

} // namespace

QuadResult simpson(const std::function<Complex(double)>& f, double a, double b,
                   int cells) {
    if (cells < 2) cells = 2;
    if (cells % 2 != 0) ++cells;
    const Complex fine = composite(f, a, b, cells);
    const Complex coarse = composite(f, a, b, cells / 2);
    return {fine, std::abs(fine - coarse) / 15.0};
}

double simpson_real(const std::function<double(double)>& f, double a, double b,
                    int cells) {
    return simpson([&](double x) { return Complex(f(x), 0.0); }, a, b, cells)
        .value.real();
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f,
                                       Interval domain, double x0, int cells)
    : f_(std::move(f)), dom_(domain), x0_(x0) {
    if (cells < 8) cells = 8;
    if (cells % 2 != 0) ++cells;
    h_ = dom_.length() / cells;
    prefix_.resize(cells + 1);

    auto fill = [this](std::vector<double>& table, double h) {
        table[0] = 0.0;
        auto fr = [this](double x) { return Complex(f_(x), 0.0); };
        for (std::size_t i = 1; i < table.size(); ++i) {
            const double a = dom_.lo + (i - 1) * h;
            table[i] = table[i - 1] + panel(fr, a, a + h).real();
        }
    };
    fill(prefix_, h_);

    // Richardson check against the half-resolution table
    std::vector<double> coarse(cells / 2 + 1);
    {
        std::vector<double> tmp(cells / 2 + 1);
        tmp[0] = 0.0;
        auto fr = [this](double x) { return Complex(f_(x), 0.0); };
        const double H = 2.0 * h_;
        for (std::size_t i = 1; i < tmp.size(); ++i) {
            const double a = dom_.lo + (i - 1) * H;
            tmp[i] = tmp[i - 1] + panel(fr, a, a + H).real();
        }
        coarse = std::move(tmp);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        worst = std::max(worst, std::abs(coarse[i] - prefix_[2 * i]) / 15.0);
    }
    err_ = worst;

    // re-anchor so that the table reads zero at x0
    const double at_x0 = (*this)(x0_);
    for (auto& p : prefix_) p -= at_x0;
}

double CumulativeIntegral::operator()(double x) const {
    const int cells = static_cast<int>(prefix_.size()) - 1;
    double t = (x - dom_.lo) / h_;
    int i = static_cast<int>(std::floor(t));
    if (i < 0) i = 0;
    if (i > cells - 1) i = cells - 1;
    const double xi = dom_.lo + i * h_;
    auto fr = [this](double y) { return Complex(f_(y), 0.0); };
    return prefix_[i] + panel(fr, xi, x).real();
}

} // namespace esusy
