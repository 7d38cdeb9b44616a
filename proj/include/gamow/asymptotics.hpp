#ifndef GAMOW_ASYMPTOTICS_HPP
#define GAMOW_ASYMPTOTICS_HPP

#include <string>

#include "gamow/params.hpp"
#include "gamow/series.hpp"

namespace gamow {

struct Thresholds {
    double degeneracy_nu = kDegeneracyThreshold;
    // Above this value of a z^2/4 the closed asymptotic forms are preferred;
    // at the threshold the heuristic error estimate (az^2/4)^(-1/3) is ~14%,
    // so asymptotic output is a fast estimate, not a precision path.
    double asym_metric = 400.0;
};

struct MethodChoice {
    Method method = Method::quadrature;
    std::string reason;
    double regime_metric = 0;  // a z^2/4
};

// Large-argument form of the G[3,0 0,3] kernel at parameters (0, 1/2, nu+1):
//   (2 pi / sqrt(3)) e^{-3 x^(1/3)} x^{(2 nu + 1)/6}
// computed in log space. Callers divide by sqrt(pi) and apply the a power.
double g3003_asymptotic(double x, double nu);

// Leading-order closed forms for large a z^2/4 (a = 1 for I1..I6, general a
// for I7). abs_error is the heuristic order estimate value * (a z^2/4)^(-1/3).
// Throws OutOfRegimeError: a != 1 for I1..I6, rho != 1/2, |gamma| >= 1 for
// I7, nonpositive bracket (z^2/4)^(1/3) <= t for I4, peak inside the cutoff
// for I2.
EvalResult asymptotic_eval(IntegralKind kind, const IntegralParams& params);

// Pure routing decision: asymptotic when the regime metric is above threshold
// and the kind's closed form applies; series when rho = 1/2, nu is
// non-degenerate (irrelevant for I4, whose inner integrals are quadrature by
// design) and the resonant window holds; quadrature otherwise.
MethodChoice select_method(IntegralKind kind, const IntegralParams& params,
                           const Thresholds& thresholds = {});

} // namespace gamow

#endif
