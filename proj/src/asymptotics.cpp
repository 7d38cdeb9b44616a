#include "gamow/asymptotics.hpp"

#include <cmath>

#include "gamow/reductions.hpp"

namespace gamow {

namespace {

constexpr double PI = 3.14159265358979323846;

double i1_asym_log(double nu, double Q) {
    // 2 sqrt(pi/3) Q^{(2nu+1)/6} e^{-3 Q^{1/3}}
    return std::log(2.0 * std::sqrt(PI / 3.0)) + (2.0 * nu + 1.0) / 6.0 * std::log(Q) -
           3.0 * std::cbrt(Q);
}

double gamma_sq(double a, double z, double c, double g) {
    const double eta = std::pow(1.0 - std::pow(z / (2.0 * a), 2.0 / 3.0) / c, 2.0);
    return eta * c * c / (g * g);
}

} // namespace

double g3003_asymptotic(double x, double nu) {
    if (!(x > 0)) throw DomainError("g3003_asymptotic: x must be positive");
    const double lg = std::log(2.0 * PI / std::sqrt(3.0)) - 3.0 * std::cbrt(x) +
                      (2.0 * nu + 1.0) / 6.0 * std::log(x);
    return std::exp(lg);
}

EvalResult asymptotic_eval(IntegralKind kind, const IntegralParams& params) {
    const IntegralParams p = validate(kind, params);
    if (p.rho != 0.5)
        throw OutOfRegimeError("asymptotic_eval: closed forms exist only at rho = 1/2");
    if (kind != IntegralKind::I7 && p.a != 1.0)
        throw OutOfRegimeError("asymptotic_eval: the I1..I6 forms are stated at a = 1 "
                               "(no rescaling rule is applied)");
    if (!(p.z > 0)) throw OutOfRegimeError("asymptotic_eval: requires z > 0");

    const double Q = p.z * p.z / 4.0;
    double log_value;

    switch (kind) {
        case IntegralKind::I1:
            log_value = i1_asym_log(p.nu, Q);
            break;
        case IntegralKind::I2: {
            const double d = *p.cutoff_d;
            if (!(p.z > 2.0 * std::pow(d, 1.5)))
                throw OutOfRegimeError("asymptotic_eval: I2 form is endpoint-dominated; "
                                       "requires z > 2 d^(3/2)");
            const double Qd = p.z * p.z / (4.0 * d);
            log_value = (p.nu + 1.0) * std::log(d) - d - 0.5 * std::log(Qd) -
                        2.0 * std::sqrt(Qd);
            break;
        }
        case IntegralKind::I3:
            log_value = i1_asym_log(p.nu, Q) -
                        p.depletion->b * std::pow(Q, p.depletion->delta / 3.0);
            break;
        case IntegralKind::I4: {
            const double t = *p.screening_t;
            const double bracket = std::cbrt(Q) - t;
            if (!(bracket > 0))
                throw OutOfRegimeError("asymptotic_eval: I4 bracket (z^2/4)^(1/3) - t "
                                       "is nonpositive");
            log_value = i1_asym_log(0.0, Q) + t + p.nu * std::log(bracket);
            break;
        }
        case IntegralKind::I5: {
            const double c = p.resonance->c, g = p.resonance->g;
            const double eta = std::pow(1.0 - std::pow(p.z / 2.0, 2.0 / 3.0) / c, 2.0);
            log_value = i1_asym_log(p.nu, Q) - std::log(g * g) -
                        std::log1p(eta * c * c / (g * g));
            break;
        }
        case IntegralKind::I6:
        case IntegralKind::I7: {
            const double c = p.resonance->c, g = p.resonance->g, pw = p.resonance->pow;
            const double g2 = gamma_sq(p.a, p.z, c, g);
            if (!(std::sqrt(g2) < 1.0))
                throw OutOfRegimeError("asymptotic_eval: |gamma| >= 1 for the I7 form");
            const double X = p.a * p.z * p.z / 4.0;
            log_value = std::log(2.0 * std::sqrt(PI / 3.0)) - (p.nu + 1.0) * std::log(p.a) -
                        2.0 * pw * std::log(std::fabs(g)) +
                        (2.0 * p.nu + 1.0) / 6.0 * std::log(X) - 3.0 * std::cbrt(X) +
                        std::log(hyper_1f0(pw, -g2));
            if (p.depletion)
                log_value -= p.depletion->b / std::pow(p.a, p.depletion->delta) *
                             std::pow(X, p.depletion->delta / 3.0);
            break;
        }
    }

    EvalResult out;
    out.value = std::exp(log_value);
    out.method = Method::asymptotic;
    out.terms_used = 1;
    out.abs_error = out.value * std::pow(p.a * Q, -1.0 / 3.0);
    return out;
}

MethodChoice select_method(IntegralKind kind, const IntegralParams& params,
                           const Thresholds& thr) {
    const IntegralParams p = validate(kind, params);
    MethodChoice mc;
    mc.regime_metric = p.a * p.z * p.z / 4.0;

    // asymptotic branch: metric above threshold and the closed form applies
    if (p.rho == 0.5 && p.z > 0) {
        bool metric_ok = mc.regime_metric > thr.asym_metric;
        bool form_ok = kind == IntegralKind::I7 || p.a == 1.0;
        switch (kind) {
            case IntegralKind::I2:
                metric_ok = p.z * p.z / (4.0 * *p.cutoff_d) > thr.asym_metric &&
                            p.z > 2.0 * std::pow(*p.cutoff_d, 1.5);
                break;
            case IntegralKind::I4:
                form_ok = form_ok && std::cbrt(p.z * p.z / 4.0) > *p.screening_t;
                break;
            case IntegralKind::I6:
            case IntegralKind::I7:
                form_ok = std::sqrt(gamma_sq(p.a, p.z, p.resonance->c, p.resonance->g)) < 1.0;
                break;
            default:
                break;
        }
        if (metric_ok && form_ok) {
            mc.method = Method::asymptotic;
            mc.reason = "a z^2/4 above the large-argument threshold";
            return mc;
        }
    }

    if (p.rho != 0.5) {
        mc.method = Method::quadrature;
        mc.reason = "rho != 1/2: no series representation in scope";
        return mc;
    }
    const bool degenerate = check_degenerate(p.nu, thr.degeneracy_nu).degenerate;
    if (degenerate && kind != IntegralKind::I4) {
        mc.method = Method::quadrature;
        mc.reason = "degenerate nu (integer or half-integer)";
        return mc;
    }
    if (!(p.nu + 1.0 > 0) && kind != IntegralKind::I4) {
        mc.method = Method::quadrature;
        mc.reason = "nu + 1 <= 0";
        return mc;
    }
    if (p.resonance) {
        const ConvergenceWindow w = resonant_window(p.resonance->c, p.resonance->g, p.a, p.z);
        if (!w.ok) {
            mc.method = Method::quadrature;
            mc.reason = "resonant window failed: " + w.detail;
            return mc;
        }
    }
    mc.method = Method::series;
    mc.reason = "rho = 1/2, non-degenerate nu, small regime metric";
    return mc;
}

} // namespace gamow
