#ifndef GAMOW_SERIES_HPP
#define GAMOW_SERIES_HPP

#include <optional>

#include "gamow/special.hpp"

namespace gamow {

// Default guard radius around integer/half-integer nu, in nu units
// (equivalently 1e-4 on |2 nu - lambda|). Near-degenerate nu routes to
// quadrature: the Gamma(-nu)-type prefactors blow up like 1/distance.
inline constexpr double kDegeneracyThreshold = 5e-5;

struct DegeneracyReport {
    bool degenerate = false;
    double nearest_half_integer = 0;
    double distance = 0;  // |nu - nearest lambda/2|
};

// degenerate iff min over integer lambda of |2 nu - lambda| < 2 * threshold.
DegeneracyReport check_degenerate(double nu, double threshold = kDegeneracyThreshold);

// I2^inf(nu, a, z, 1/2) = int_0^inf y^nu e^{-a y} e^{-z y^{-1/2}} dy
// (the y^nu convention of the nonresonant integral; shifted internally).
//
// Sum of the three residue families of Gamma(s) Gamma(s+1/2) Gamma(nu+1+s)
// (a z^2/4)^{-s}: a linear combination of three 0F2 series. Requires
// nu + 1 > 0 and non-degenerate nu.
// Throws DegenerateNuError / DomainError; converged=false with a warning when
// the inter-family cancellation floor exceeds the achievable accuracy.
EvalResult i2_infinite_series(double nu, double a, double z,
                              const SeriesControl& ctl = {});

// I2^(d) in the v^{nu-1} convention: int_0^d v^{nu-1} e^{-a v} e^{-z v^{-1/2}} dv,
// nu > 0, non-degenerate. The residue double series is summed column-wise:
// the m-sum is carried out in closed form, leaving single sums with
// analytically-continued lower-incomplete-gamma coefficients
//   a^-nu [ sum_n X^n g(nu-n, ad)/((1/2)_n n!)
//           - 2 sqrt(X) sum_n X^n g(nu-1/2-n, ad)/((3/2)_n n!) ]
//   + a^-nu X^nu Gamma(-nu) Gamma(1/2-nu)/sqrt(pi) 0F2(; nu+1, nu+1/2; -X)
// with X = a z^2/4. Stable for all a*d (the raw m-sum loses e^{ad} digits).
EvalResult i2_finite_series(double nu, double a, double z, double d,
                            const SeriesControl& ctl = {});

// Routes to the series representations when rho = 1/2 and nu is
// non-degenerate, otherwise (and when the series reports itself
// cancellation-limited) to the quadrature oracle. nu uses the y^nu convention
// for both the infinite and the finite limit.
EvalResult i2_dispatch(double nu, double a, double z, double rho,
                       std::optional<double> d, const SeriesControl& ctl = {});

} // namespace gamow

#endif
