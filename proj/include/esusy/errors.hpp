#pragma once

#include <stdexcept>
#include <string>

namespace esusy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// second_solution: the seed solution vanished on the integration path
struct ZeroCrossing : Error {
    double where;
    explicit ZeroCrossing(double x)
        : Error("seed solution vanishes near x = " + std::to_string(x)), where(x) {}
};

struct NonRealLambda0 : Error { using Error::Error; };
struct NotRealQuadraticForm : Error { using Error::Error; };

struct NotPositive : Error {
    double where;
    NotPositive(const std::string& msg, double x) : Error(msg), where(x) {}
};

struct LambdaMismatch : Error { using Error::Error; };
struct ZeroLambdaBranch : Error { using Error::Error; };
struct LambdaOutOfRange : Error { using Error::Error; };
struct EnergyBelowFactorization : Error { using Error::Error; };
struct ZeroCrossingRisk : Error { using Error::Error; };

struct QuadratureFailure : Error {
    double achieved;
    QuadratureFailure(const std::string& msg, double err) : Error(msg), achieved(err) {}
};

struct SeriesNonConvergence : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct NonFinitePotential : Error {
    int index;
    NonFinitePotential(const std::string& msg, int i) : Error(msg), index(i) {}
};
struct EigenNoConvergence : Error { using Error::Error; };
struct AsymmetricDomain : Error { using Error::Error; };

} // namespace esusy
