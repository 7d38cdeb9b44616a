#include "gamow/special.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gamow {

namespace detail {

namespace {

constexpr long double PI_L = 3.141592653589793238462643383279502884L;
constexpr long double LOG_SQRT_2PI_L = 0.918938533204672741780329736405617639L;

// Stirling tail coefficients B_{2n} / (2n (2n-1)).
constexpr long double STIRLING[] = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
};

constexpr long double STIRLING_CUT = 13.0L;

long double stirling_log_gamma(long double x) {
    // valid for x >= STIRLING_CUT
    long double s = (x - 0.5L) * std::log(x) - x + LOG_SQRT_2PI_L;
    const long double r2 = 1.0L / (x * x);
    long double p = 1.0L / x;
    for (long double coeff : STIRLING) {
        s += coeff * p;
        p *= r2;
    }
    return s;
}

// |sin(pi x)| with argument reduction so accuracy holds near integers.
long double abs_sin_pi(long double x) {
    long double r = x - std::floor(x);       // [0, 1)
    if (r > 0.5L) r = 1.0L - r;
    return std::sin(PI_L * r);
}

} // namespace

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

void check_control(const SeriesControl& ctl) {
    if (!(ctl.rel_tol > 0) || !(ctl.rel_tol < 1))
        throw DomainError("SeriesControl.rel_tol must be in (0, 1)");
    if (ctl.max_terms < 16)
        throw DomainError("SeriesControl.max_terms must be >= 16");
}

LogGammaL lgamma_signed(long double x) {
    if (x <= 0.0L && x == std::floor(x))
        throw PoleError("log_gamma: pole at nonpositive integer x = " + std::to_string((double)x));

    if (x >= 0.5L) {
        if (x >= STIRLING_CUT) return {stirling_log_gamma(x), 1};
        // recurrence up: Gamma(x) = Gamma(x+k) / (x (x+1) ... (x+k-1))
        long double shift = 0.0L;
        long double y = x;
        while (y < STIRLING_CUT) {
            shift += std::log(y);
            y += 1.0L;
        }
        return {stirling_log_gamma(y) - shift, 1};
    }

    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); Gamma(1-x) > 0 here
    const LogGammaL right = lgamma_signed(1.0L - x);
    const long double log_abs = std::log(PI_L) - std::log(abs_sin_pi(x)) - right.log_abs;
    // sign(Gamma(x)) = sign(sin(pi x)): negative on (-1,0), (-2,-3), ...
    const long long fl = (long long)std::floor(x);
    const int sign = (fl % 2 == 0) ? 1 : -1;
    return {log_abs, sign};
}

long double lower_gamma_l(long double mu, long double x) {
    if (mu <= 0.0L && mu == std::floor(mu))
        throw PoleError("lower_gamma: mu must not be a nonpositive integer");
    if (x < 0.0L) throw DomainError("lower_gamma: x must be nonnegative");
    if (x == 0.0L) return 0.0L;

    if (mu > 0.0L) {
        if (x < mu + 1.0L) {
            // series gamma(mu,x) = x^mu e^-x sum_k x^k / (mu (mu+1) ... (mu+k))
            long double term = 1.0L / mu;
            long double sum = term;
            for (int k = 1; k < 10000; ++k) {
                term *= x / (mu + k);
                sum += term;
                if (term < sum * 1e-21L) break;
            }
            return std::exp(mu * std::log(x) - x) * sum;
        }
        // gamma = Gamma(mu) - upper(mu, x), upper by Lentz continued fraction
        const long double tiny = 1e-4000L;
        long double f = x + 1.0L - mu;
        if (f == 0.0L) f = tiny;
        long double C = f, D = 0.0L;
        for (int i = 1; i < 10000; ++i) {
            const long double an = -i * (i - mu);
            const long double bn = x + 2.0L * i + 1.0L - mu;
            D = bn + an * D;
            if (D == 0.0L) D = tiny;
            C = bn + an / C;
            if (C == 0.0L) C = tiny;
            D = 1.0L / D;
            const long double delta = C * D;
            f *= delta;
            if (std::fabs(delta - 1.0L) < 1e-21L) break;
        }
        const long double upper = std::exp(mu * std::log(x) - x) / f;
        const LogGammaL lg = lgamma_signed(mu);
        return lg.sign * std::exp(lg.log_abs) - upper;
    }

    // negative non-integer mu: recur down from mu0 in (0, 1]
    const int steps = (int)std::floor(-mu) + 1;
    long double m = mu + steps;
    long double value = lower_gamma_l(m, x);
    for (int i = 0; i < steps; ++i) {
        m -= 1.0L;
        value = (value + std::exp(m * std::log(x) - x)) / m;
    }
    return value;
}

Hyper0F2Sum hyper_0f2_l(long double b1, long double b2, long double x,
                        const SeriesControl& ctl) {
    Hyper0F2Sum out;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double max_mag = 1.0L;
    std::size_t small_streak = 0;
    std::size_t n = 0;
    while (n < ctl.max_terms) {
        term *= x / ((b1 + n) * (b2 + n) * (n + 1));
        ++n;
        sum += term;
        const long double mag = std::fabs(term);
        if (mag > max_mag) max_mag = mag;
        if (mag <= ctl.rel_tol * std::fabs(sum)) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
    }
    out.value = sum;
    out.max_mag = max_mag;
    out.terms = n;
    out.converged = small_streak >= 3;
    return out;
}

} // namespace detail

LogGamma log_gamma(double x) {
    const auto r = detail::lgamma_signed((long double)x);
    return {(double)r.log_abs, r.sign};
}

double gamma_fn(double x) {
    const auto r = detail::lgamma_signed((long double)x);
    return (double)(r.sign * std::exp(r.log_abs));
}

double pochhammer(double a, std::size_t n) {
    if (n == 0) return 1.0;
    if (n <= 48) {
        long double p = 1.0L;
        for (std::size_t i = 0; i < n; ++i) p *= (long double)a + i;
        return (double)p;
    }
    // log-scaled path; zero if the product crosses a nonpositive-integer a
    if (detail::is_nonpositive_integer(a)) {
        if ((double)n > -a) return 0.0;
        long double p = 1.0L;
        for (std::size_t i = 0; i < n; ++i) p *= (long double)a + i;
        return (double)p;
    }
    const auto top = detail::lgamma_signed((long double)a + (long double)n);
    const auto bot = detail::lgamma_signed((long double)a);
    return (double)(top.sign * bot.sign * std::exp(top.log_abs - bot.log_abs));
}

double lower_gamma(double mu, double x) {
    return (double)detail::lower_gamma_l((long double)mu, (long double)x);
}

EvalResult hyper_0f2(double b1, double b2, double x, const SeriesControl& ctl) {
    detail::check_control(ctl);
    if (detail::is_nonpositive_integer(b1))
        throw DegenerateParamError("hyper_0f2: b1 is a nonpositive integer, (b1)_n vanishes");
    if (detail::is_nonpositive_integer(b2))
        throw DegenerateParamError("hyper_0f2: b2 is a nonpositive integer, (b2)_n vanishes");

    const auto s = detail::hyper_0f2_l(b1, b2, x, ctl);
    EvalResult out;
    out.value = (double)s.value;
    out.method = Method::series;
    out.terms_used = s.terms;
    out.abs_error = (double)(s.max_mag * 1e-19L + std::fabs(s.value) * (long double)ctl.rel_tol);
    out.converged = s.converged;
    if (!s.converged)
        out.mark_failed("hyper_0f2: max_terms reached before three consecutive small terms");
    return out;
}

double hyper_1f0(double d, double x) {
    if (std::fabs(x) >= 1.0)
        throw DivergenceError("hyper_1f0: |x| >= 1 is outside the radius of convergence");
    return std::pow(1.0 - x, -d);
}

} // namespace gamow
