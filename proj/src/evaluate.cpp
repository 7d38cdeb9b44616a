#include "gamow/evaluate.hpp"

namespace gamow {

namespace {

EvalResult run_series(IntegralKind kind, const IntegralParams& p, const EvalOptions& opts) {
    switch (kind) {
        case IntegralKind::I1:
            return i2_dispatch(p.nu, p.a, p.z, p.rho, std::nullopt, opts.reduction.series);
        case IntegralKind::I2:
            return i2_dispatch(p.nu, p.a, p.z, p.rho, p.cutoff_d, opts.reduction.series);
        case IntegralKind::I3:
            return i3_eval(p, opts.reduction);
        case IntegralKind::I4:
            return i4_eval(p, opts.reduction);
        case IntegralKind::I5:
            return i5_eval(p, opts.reduction);
        case IntegralKind::I6:
        case IntegralKind::I7:
            return i7_eval(p, opts.reduction);
    }
    throw DomainError("run_series: unknown kind");
}

} // namespace

EvalResult evaluate(IntegralKind kind, const IntegralParams& params, const EvalOptions& opts) {
    const IntegralParams p = validate(kind, params);

    if (opts.force) {
        switch (*opts.force) {
            case Method::quadrature:
                return oracle_eval(kind, p, opts.reduction.quad);
            case Method::series:
                return run_series(kind, p, opts);
            case Method::asymptotic:
                return asymptotic_eval(kind, p);
        }
    }

    const MethodChoice choice = select_method(kind, p, opts.thresholds);
    switch (choice.method) {
        case Method::asymptotic:
            try {
                return asymptotic_eval(kind, p);
            } catch (const OutOfRegimeError& e) {
                EvalResult out = oracle_eval(kind, p, opts.reduction.quad);
                out.add_warning(std::string("asymptotic out of regime: ") + e.what());
                return out;
            }
        case Method::series:
            try {
                return run_series(kind, p, opts);
            } catch (const CancellationError& e) {
                EvalResult out = oracle_eval(kind, p, opts.reduction.quad);
                out.add_warning(std::string("series cancelled: ") + e.what());
                return out;
            } catch (const DegenerateNuError& e) {
                EvalResult out = oracle_eval(kind, p, opts.reduction.quad);
                out.add_warning(std::string("degenerate nu: ") + e.what());
                return out;
            }
        case Method::quadrature:
            return oracle_eval(kind, p, opts.reduction.quad);
    }
    throw DomainError("evaluate: unreachable");
}

} // namespace gamow
