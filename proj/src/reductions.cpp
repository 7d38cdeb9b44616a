#include "gamow/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <vector>

namespace gamow {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

SeriesControl inner_series_control(const ReductionControl& ctl) {
    SeriesControl s = ctl.series;
    s.rel_tol = std::min(s.rel_tol, 1e-11);
    return s;
}

// Alternating-series accumulator with the three stopping regimes the
// reductions share: clean convergence, optimal truncation of an asymptotic
// tail, and the ill-conditioning guards.
struct AlternatingSum {
    long double sum = 0;
    long double max_abs = 0;
    long double prev_abs = std::numeric_limits<long double>::infinity();
    long double min_abs = std::numeric_limits<long double>::infinity();
    long double sum_before_min = 0;  // prefix sum excluding the minimal term
    long double min_term = 0;
    std::size_t terms = 0;
    std::size_t small_streak = 0;
    std::size_t growth_streak = 0;

    enum class State { keep_going, converged, diverging, overflow };

    State push(long double t, double rel_tol) {
        if (!std::isfinite((double)t)) return State::overflow;
        const long double mag = std::fabs(t);
        if (mag < min_abs) {
            min_abs = mag;
            min_term = t;
            sum_before_min = sum;
        }
        sum += t;
        ++terms;
        if (mag > max_abs) max_abs = mag;
        if (mag <= rel_tol * std::fabs(sum)) {
            if (++small_streak >= 3) return State::converged;
        } else {
            small_streak = 0;
        }
        if (mag > prev_abs) {
            if (++growth_streak >= 2 && mag > 10 * min_abs && terms > 2)
                return State::diverging;
        } else {
            growth_streak = 0;
        }
        prev_abs = mag;
        return State::keep_going;
    }

    // optimally truncated value: prefix before the smallest term plus half of it
    long double truncated() const { return sum_before_min + min_term / 2; }
    double truncated_rel_err() const {
        const long double v = truncated();
        if (v == 0) return 1.0;
        return (double)(min_abs / 2 / std::fabs(v));
    }
};

} // namespace

ConvergenceWindow resonant_window(double c, double g, double a, double z) {
    if (!(a > 0)) throw DomainError("resonant_window: a must be positive");
    if (g == 0) throw DomainError("resonant_window: g must be nonzero");
    const double gm = std::fabs(g);
    ConvergenceWindow w;
    w.z_low = c > gm ? 2.0 * a * std::pow(c - gm, 1.5) : 0.0;
    w.z_high = 2.0 * a * std::pow(c + gm, 1.5);
    w.c_bound = gm - std::fabs(c - 1.0 / a);
    const bool c_ok = w.c_bound > 0;
    const bool z_ok = w.z_low < z && z < w.z_high;
    w.ok = c_ok && z_ok;
    w.detail = "c window (" + fmt(std::max(1.0 / a - gm, 0.0)) + ", " + fmt(1.0 / a + gm) +
               "): " + (c_ok ? "pass" : "fail") + "; z window (" + fmt(w.z_low) + ", " +
               fmt(w.z_high) + "): " + (z_ok ? "pass" : "fail");
    if (a == 1.0 && gm >= 2.0)
        w.detail += "; combined small/large bound 0 < z < " + fmt(2.0 * (2.0 + gm));
    return w;
}

EvalResult i3_eval(const IntegralParams& params, const ReductionControl& ctl) {
    const IntegralParams p = validate(IntegralKind::I3, params);
    const double b = p.depletion->b;
    const double delta = p.depletion->delta;
    const SeriesControl inner = inner_series_control(ctl);

    AlternatingSum acc;
    long double coef = 1.0L;  // (-b)^m / m!
    double inner_err = 0;
    bool any_quadrature = false;
    for (std::size_t m = 0; m < ctl.series.max_terms; ++m) {
        if (m > 0) coef *= -(long double)b / m;
        const EvalResult term = i2_dispatch(p.nu + delta * m, p.a, p.z, p.rho, std::nullopt, inner);
        any_quadrature = any_quadrature || term.method == Method::quadrature;
        inner_err += std::fabs((double)coef) * term.abs_error;
        const auto state = acc.push(coef * (long double)term.value, ctl.series.rel_tol);

        if (acc.max_abs > 0 && std::fabs(acc.sum) < 1e-3L * acc.max_abs && m >= 2)
            throw CancellationError("i3_eval: partial sum fell below 1e-3 of the largest term "
                                    "(alternating reduction ill-conditioned)");
        if (state == AlternatingSum::State::converged) {
            EvalResult out;
            out.value = (double)acc.sum;
            out.method = Method::series;
            out.terms_used = acc.terms;
            out.abs_error = (double)acc.min_abs + inner_err +
                            std::fabs(out.value) * ctl.series.rel_tol;
            if (any_quadrature)
                out.add_warning("i3_eval: some inner terms evaluated by quadrature");
            return out;
        }
        if (state == AlternatingSum::State::overflow)
            throw CancellationError("i3_eval: series terms overflowed");
        if (state == AlternatingSum::State::diverging) {
            const double est = acc.truncated_rel_err();
            const long double best = acc.truncated();
            if (est <= ctl.asym_accept_rel && best > 0) {
                EvalResult out;
                out.value = (double)best;
                out.method = Method::series;
                out.terms_used = acc.terms;
                out.abs_error = (double)(acc.min_abs / 2) + inner_err;
                out.add_warning("i3_eval: asymptotic tail truncated at the smallest term");
                return out;
            }
            if (acc.max_abs > 1e3L * std::fabs(best))
                throw CancellationError("i3_eval: alternating series diverges, terms exceed "
                                        "1e3 x best partial sum");
            EvalResult out = oracle_eval(IntegralKind::I3, p, ctl.quad);
            out.add_warning("i3_eval: series truncation floor " + fmt(est) +
                            " above tolerance; quadrature fallback");
            return out;
        }
    }
    throw NonConvergenceError("i3_eval: max_terms exhausted before convergence");
}

EvalResult i4_eval(const IntegralParams& params, const ReductionControl& ctl) {
    const IntegralParams p = validate(IntegralKind::I4, params);
    const double t = *p.screening_t;
    const bool integer_nu = p.nu >= 0 && p.nu == std::floor(p.nu);
    const std::size_t exact_terms = integer_nu ? (std::size_t)p.nu + 1 : 0;

    QuadratureControl tail_ctl = ctl.quad;
    tail_ctl.rel_tol = std::min(tail_ctl.rel_tol, 1e-11);

    long double sum = 0;
    long double coef = 1.0L;  // (-nu)_m t^m / m!
    double inner_err = 0;
    std::size_t small_streak = 0;
    std::size_t used = 0;
    const std::size_t cap = integer_nu ? exact_terms : ctl.series.max_terms;
    bool converged = integer_nu;
    for (std::size_t m = 0; m < cap; ++m) {
        if (m > 0) {
            coef *= (long double)(-p.nu + (double)(m - 1)) * t / m;
            if (coef == 0) { converged = true; break; }
        }
        const double T = detail::integrate_tail(p.nu - (double)m, p.a, p.z, p.rho, t, tail_ctl);
        const long double term = coef * T;
        sum += term;
        ++used;
        inner_err += std::fabs((double)coef) * std::fabs(T) * tail_ctl.rel_tol;
        if (!integer_nu) {
            if (std::fabs(term) <= ctl.series.rel_tol * std::fabs(sum)) {
                if (++small_streak >= 3) { converged = true; break; }
            } else {
                small_streak = 0;
            }
        }
    }

    const long double scale = std::exp((long double)p.a * t);
    if (!converged) {
        // fractional nu: the tail decays only like m^-(nu+2); past the budget
        // hand the job to the oracle instead of returning a stale sum
        EvalResult out = oracle_eval(IntegralKind::I4, p, ctl.quad);
        out.add_warning("i4_eval: fractional-nu series stalled; quadrature fallback");
        return out;
    }
    EvalResult out;
    out.value = (double)(scale * sum);
    out.method = Method::series;
    out.terms_used = used;
    out.abs_error = (double)scale * inner_err + std::fabs(out.value) * ctl.series.rel_tol;
    return out;
}

namespace detail {

LadderSum resonant_ladder(double nu, double a, double z, double rho, double c,
                          double g, double pw, double b, double delta,
                          const ReductionControl& ctl) {
    const SeriesControl inner = inner_series_control(ctl);
    const long double g2 = (long double)g * g;
    const bool depleted = b != 0;

    // memoized inner values: I2^inf(nu + m1 + delta n)
    std::map<std::pair<int, int>, double> i2_memo;
    auto inner_i2 = [&](int m1, int n) {
        const auto key = std::make_pair(m1, n);
        auto it = i2_memo.find(key);
        if (it != i2_memo.end()) return it->second;
        const double v =
            i2_dispatch(nu + m1 + delta * n, a, z, rho, std::nullopt, inner).value;
        i2_memo.emplace(key, v);
        return v;
    };

    // W(m1) = sum_n (-b)^n/n! I2^inf(nu + m1 + delta n); single n=0 term when
    // no depletion. The n-sum has the same alternating structure as I3.
    std::map<int, long double> w_memo;
    auto W = [&](int m1) -> long double {
        auto it = w_memo.find(m1);
        if (it != w_memo.end()) return it->second;
        long double v;
        if (!depleted) {
            v = inner_i2(m1, 0);
        } else {
            AlternatingSum acc;
            long double coef = 1.0L;
            bool done = false;
            for (std::size_t n = 0; n < ctl.series.max_terms; ++n) {
                if (n > 0) coef *= -(long double)b / n;
                const auto st = acc.push(coef * (long double)inner_i2(m1, (int)n),
                                         ctl.series.rel_tol);
                if (st == AlternatingSum::State::converged) { done = true; break; }
                if (st != AlternatingSum::State::keep_going) break;
            }
            v = done ? acc.sum : acc.truncated();
        }
        w_memo.emplace(m1, v);
        return v;
    };

    LadderSum out;
    AlternatingSum acc;
    long double pw_coef = 1.0L;  // (pw)_m / m!
    for (std::size_t m = 0; m < ctl.max_ladder_terms; ++m) {
        if (m > 0) pw_coef *= ((long double)pw + (m - 1)) / m;
        // inner binomial sum sum_{m1<=2m} C(2m,m1) (-1)^m1 c^(2m-m1) W(m1)
        long double binom = 1.0L;
        long double inner_sum = 0;
        long double inner_max = 0;
        for (std::size_t m1 = 0; m1 <= 2 * m; ++m1) {
            if (m1 > 0) binom *= (long double)(2 * m - m1 + 1) / m1;
            const long double piece = binom *
                (m1 % 2 ? -1.0L : 1.0L) *
                std::pow((long double)c, (long double)(2 * m - m1)) * W((int)m1);
            inner_sum += piece;
            inner_max = std::max(inner_max, std::fabs(piece));
        }
        if (inner_max > 0 && std::fabs(inner_sum) < 1e-3L * inner_max) {
            out.note = "inner binomial sum lost more than 3 digits";
            out.value = (double)acc.truncated();
            out.est_rel = acc.truncated_rel_err();
            out.terms = acc.terms;
            return out;
        }
        const long double term = (m % 2 ? -1.0L : 1.0L) * pw_coef *
            std::exp(-((long double)m + (long double)pw) * std::log(g2)) * inner_sum;

        const auto state = acc.push(term, ctl.series.rel_tol);
        if (state == AlternatingSum::State::converged) {
            out.value = (double)acc.sum;
            out.est_rel = (double)(acc.min_abs / std::max(std::fabs(acc.sum), (long double)1e-300));
            out.est_rel = std::min(out.est_rel, ctl.series.rel_tol);
            out.terms = acc.terms;
            out.usable = true;
            return out;
        }
        if (state == AlternatingSum::State::overflow ||
            state == AlternatingSum::State::diverging) {
            out.value = (double)acc.truncated();
            out.est_rel = acc.truncated_rel_err();
            out.terms = acc.terms;
            out.usable = state == AlternatingSum::State::diverging &&
                         out.est_rel <= ctl.asym_accept_rel && out.value > 0;
            out.note = "asymptotic ladder truncated at the smallest term (est rel err " +
                       fmt(out.est_rel) + ")";
            return out;
        }
    }
    out.value = (double)acc.truncated();
    out.est_rel = acc.truncated_rel_err();
    out.terms = acc.terms;
    out.usable = out.est_rel <= ctl.asym_accept_rel && out.value > 0;
    out.note = "ladder term budget reached (est rel err " + fmt(out.est_rel) + ")";
    return out;
}

} // namespace detail

namespace {

EvalResult resonant_eval(IntegralKind kind, const IntegralParams& p,
                         const ReductionControl& ctl) {
    const Resonance& res = *p.resonance;
    const double b = p.depletion ? p.depletion->b : 0.0;
    const double delta = p.depletion ? p.depletion->delta : 1.0;

    std::string why;
    if (p.rho != 0.5) {
        why = "series path requires rho = 1/2";
    } else {
        const ConvergenceWindow w = resonant_window(res.c, res.g, p.a, p.z);
        if (!w.ok) {
            why = "outside the resonant convergence window (" + w.detail + ")";
        } else {
            const auto lad = detail::resonant_ladder(p.nu, p.a, p.z, p.rho, res.c,
                                                     res.g, res.pow, b, delta, ctl);
            if (lad.usable) {
                EvalResult out;
                out.value = lad.value;
                out.method = Method::series;
                out.terms_used = lad.terms;
                out.abs_error = lad.value * lad.est_rel;
                if (!lad.note.empty()) out.add_warning(to_string(kind) + std::string(": ") + lad.note);
                return out;
            }
            why = lad.note.empty() ? "ladder unusable" : lad.note;
        }
    }
    EvalResult out = oracle_eval(kind, p, ctl.quad);
    out.add_warning(std::string(to_string(kind)) + ": " + why + "; quadrature fallback");
    return out;
}

} // namespace

EvalResult i5_eval(const IntegralParams& params, const ReductionControl& ctl) {
    const IntegralParams p = validate(IntegralKind::I5, params);
    return resonant_eval(IntegralKind::I5, p, ctl);
}

EvalResult i7_eval(const IntegralParams& params, const ReductionControl& ctl) {
    const IntegralParams p = validate(IntegralKind::I7, params);
    return resonant_eval(IntegralKind::I7, p, ctl);
}

} // namespace gamow
