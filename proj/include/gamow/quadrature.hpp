#ifndef GAMOW_QUADRATURE_HPP
#define GAMOW_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "gamow/params.hpp"

namespace gamow {

struct QuadratureControl {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    int max_depth = 40;
};

// Pointwise integrand value for the given kind, computed in log space and
// exponentiated (z and a*y can reach ~1e3; e^x alone would overflow).
// y = 0 returns the limit: 0 when z > 0, y^nu when z = 0 (inf for nu < 0).
double integrand(IntegralKind kind, const IntegralParams& params, double y);

// Adaptive Gauss-Kronrod evaluation of the raw integral. The domain is split
// at the log-integrand maximum (Gamow peak) and at the resonance center when
// present; the infinite tail is mapped onto (0,1) by a decaying substitution.
// Throws NonConvergenceError when the refinement budget is exhausted with the
// residual above tolerance.
EvalResult oracle_eval(IntegralKind kind, const IntegralParams& params,
                       const QuadratureControl& ctl = {});

// Same scheme run in long double with a tighter default tolerance; used by
// tests as the higher-precision rerun.
EvalResult oracle_eval_precise(IntegralKind kind, const IntegralParams& params,
                               const QuadratureControl& ctl = {.rel_tol = 1e-13});

namespace detail {

void check_control(const QuadratureControl& ctl);

// int_lower^inf y^nu_exp e^{-a y - z y^-rho} dy, lower > 0. Building block of
// the screened reduction, where the inner exponents are negative integers.
double integrate_tail(double nu_exp, double a, double z, double rho,
                      double lower, const QuadratureControl& ctl = {});

// Location of the maximum of the log-integrand on (0, hi).
double peak_location(IntegralKind kind, const IntegralParams& params, double hi);

// Adaptive Gauss-Kronrod over the given sorted breakpoints, optionally
// followed by the mapped tail (last breakpoint, inf). Generic entry for
// callers that integrate in other variables (e.g. physical energy).
double integrate_function(const std::function<double(double)>& f,
                          const std::vector<double>& breakpoints, bool add_tail,
                          const QuadratureControl& ctl = {});

} // namespace detail

} // namespace gamow

#endif
