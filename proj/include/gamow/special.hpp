#ifndef GAMOW_SPECIAL_HPP
#define GAMOW_SPECIAL_HPP

#include <cstddef>

#include "gamow/params.hpp"

namespace gamow {

// Termination control for all series evaluations. A series stops once three
// consecutive terms fall below rel_tol * |partial sum| (single small terms can
// be transient dips near sign alternations).
struct SeriesControl {
    double rel_tol = 1e-12;
    std::size_t max_terms = 4096;
};

// ln |Gamma(x)| and the sign of Gamma(x).
struct LogGamma {
    double log_abs = 0;
    int sign = 1;
};

// Accurate to ~1e-15 relative on |x| <= 50 (Stirling series with upward
// recurrence, reflection for x < 0.5, evaluated in long double).
// Throws PoleError for x in {0, -1, -2, ...}.
LogGamma log_gamma(double x);

// Gamma(x) itself; overflows to +/-inf for large x.
double gamma_fn(double x);

// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
// Direct product for moderate n, log-scaled for large n.
double pochhammer(double a, std::size_t n);

// Lower incomplete gamma, gamma(mu, x) = int_0^x t^{mu-1} e^{-t} dt for mu > 0,
// extended to negative non-integer mu by the analytic continuation
// gamma(mu, x) = [gamma(mu+1, x) + x^mu e^{-x}] / mu (values may be negative).
// Throws PoleError for mu in {0, -1, -2, ...}.
double lower_gamma(double mu, double x);

// 0F2(; b1, b2; x) = sum_n x^n / ((b1)_n (b2)_n n!).
// Throws DegenerateParamError when b1 or b2 is a nonpositive integer.
EvalResult hyper_0f2(double b1, double b2, double x, const SeriesControl& ctl = {});

// 1F0(d; ; x) = (1 - x)^(-d), the binomial series closed form.
// Throws DivergenceError for |x| >= 1.
double hyper_1f0(double d, double x);

namespace detail {

// long double cores used by the series engine, where the three residue
// families cancel and double alone loses too many digits.

struct LogGammaL {
    long double log_abs = 0;
    int sign = 1;
};

LogGammaL lgamma_signed(long double x);
long double lower_gamma_l(long double mu, long double x);

struct Hyper0F2Sum {
    long double value = 0;
    long double max_mag = 0;   // largest |term| seen, for cancellation floors
    std::size_t terms = 0;
    bool converged = true;
};

Hyper0F2Sum hyper_0f2_l(long double b1, long double b2, long double x,
                        const SeriesControl& ctl);

void check_control(const SeriesControl& ctl);
bool is_nonpositive_integer(double x);

} // namespace detail

} // namespace gamow

#endif
