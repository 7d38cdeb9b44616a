#ifndef GAMOW_REDUCTIONS_HPP
#define GAMOW_REDUCTIONS_HPP

#include <string>

#include "gamow/quadrature.hpp"
#include "gamow/series.hpp"

namespace gamow {

// Region where the resonant ladder's leading behaviour is geometric:
//   1/a - |g| < c < 1/a + |g|   and   2a[c-|g|]^(3/2) < z < 2a[c+|g|]^(3/2)
// (the lower z bound reads 0 when c < |g|).
struct ConvergenceWindow {
    bool ok = false;
    double z_low = 0;
    double z_high = 0;
    double c_bound = 0;  // |g| - |c - 1/a|, positive iff the c condition holds
    std::string detail;
};

ConvergenceWindow resonant_window(double c, double g, double a, double z);

// Controls for the reduction series on top of the shared SeriesControl.
struct ReductionControl {
    SeriesControl series;
    QuadratureControl quad;
    // Largest acceptable estimated relative error for an optimally-truncated
    // asymptotic ladder; beyond it the evaluation falls back to quadrature.
    double asym_accept_rel = 5e-6;
    std::size_t max_ladder_terms = 60;
};

// I3 = sum_m (-b)^m/m! I2^inf(nu + delta m): depleted-tail reduction.
// CancellationError when the alternating sum blows up (|terms| explode past
// the best partial sum, or the partial sum drops below 1e-3 of the largest
// term); quadrature fallback with a warning when the series merely stalls.
EvalResult i3_eval(const IntegralParams& params, const ReductionControl& ctl = {});

// I4 = e^{at} sum_m (-nu)_m/m! t^m int_t^inf u^{nu-m} e^{-a u - z u^-rho} du:
// screened reduction; inner tails by quadrature (their exponents are
// degenerate whenever nu is an integer). Exactly nu+1 terms for integer nu.
EvalResult i4_eval(const IntegralParams& params, const ReductionControl& ctl = {});

// I5: Breit-Wigner reduction through the x-integral identity; the m-ladder is
// an asymptotic series, summed to its smallest term with half-term
// correction. Window failure or an unacceptable truncation floor falls back
// to quadrature with a warning, never an error.
EvalResult i5_eval(const IntegralParams& params, const ReductionControl& ctl = {});

// I7: generalized resonant reduction (arbitrary denominator power, optional
// depletion). i5_eval is this with pow = 1 and no depletion; I6 is pow = 1
// with depletion.
EvalResult i7_eval(const IntegralParams& params, const ReductionControl& ctl = {});

namespace detail {

// Raw resonant ladder sum, bypassing validate and the window check; exposed
// for the c -> 0 collapse limit test. Returns the optimally truncated sum.
struct LadderSum {
    double value = 0;
    double est_rel = 0;
    std::size_t terms = 0;
    bool usable = false;
    std::string note;
};

LadderSum resonant_ladder(double nu, double a, double z, double rho, double c,
                          double g, double pw, double b, double delta,
                          const ReductionControl& ctl);

} // namespace detail

} // namespace gamow

#endif
