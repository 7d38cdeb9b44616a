#include "gamow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace gamow {

namespace {

// 7-15 Gauss-Kronrod pair (QUADPACK dqk15 abscissae/weights).
constexpr double XGK[8] = {
    0.99145537112081263920685469752633, 0.94910791234275852452618968404785,
    0.86486442335976907278971278864093, 0.74153118559939443986386477328079,
    0.58608723546769113029414483825873, 0.40584515137739716690660641207696,
    0.20778495500789846760068940377324, 0.0};
constexpr double WGK[8] = {
    0.02293532201052922496373200805897, 0.06309209262997855329070066318921,
    0.10479001032225018383987632254152, 0.14065325971552591874518959051024,
    0.16900472663926790282658342659855, 0.19035057806478540991325640242101,
    0.20443294007529889241416199923465, 0.20948214108472782801299917489171};
constexpr double WG[4] = {
    0.12948496616886969327061143267908, 0.27970539148927666790146777142378,
    0.38183005050511894495036977548898, 0.41795918367346938775510204081633};

template <class Real>
struct PanelResult {
    Real integral = 0;
    Real error = 0;
    Real resabs = 0;
};

template <class Real, class F>
PanelResult<Real> gk15(const F& f, Real lo, Real hi) {
    const Real half = (hi - lo) / 2;
    const Real mid = (lo + hi) / 2;
    const Real fc = f(mid);
    Real resk = WGK[7] * fc;
    Real resg = WG[3] * fc;
    Real resabs = std::fabs(resk);
    Real fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const Real dx = half * (Real)XGK[j];
        const Real f1 = f(mid - dx);
        const Real f2 = f(mid + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += WGK[j] * (f1 + f2);
        if (j % 2 == 1) resg += WG[j / 2] * (f1 + f2);
        resabs += WGK[j] * (std::fabs(f1) + std::fabs(f2));
    }
    const Real mean = resk / 2;
    Real resasc = WGK[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += WGK[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
    resasc *= std::fabs(half);
    resabs *= std::fabs(half);

    Real err = std::fabs((resk - resg) * half);
    if (resasc != 0 && err != 0) {
        const Real scaled = std::pow((Real)200 * err / resasc, (Real)1.5);
        err = resasc * std::min((Real)1, scaled);
    }
    return {resk * half, err, resabs};
}

template <class Real, class F>
struct Adaptive {
    const F& f;
    int max_depth;
    Real abs_tol_panel;     // per-unit-of-length absolute floor
    Real value = 0;
    Real error = 0;
    long panels = 0;
    bool budget_hit = false;

    void run(Real lo, Real hi, Real tol, int depth) {
        const auto r = gk15<Real>(f, lo, hi);
        ++panels;
        if (r.error <= tol || depth >= max_depth || panels > 200000 ||
            r.error <= abs_tol_panel * (hi - lo)) {
            value += r.integral;
            error += r.error;
            if (r.error > tol && (depth >= max_depth || panels > 200000)) budget_hit = true;
            return;
        }
        const Real mid = (lo + hi) / 2;
        run(lo, mid, tol / 2, depth + 1);
        run(mid, hi, tol / 2, depth + 1);
    }
};

// generic driver: integrate f over the sorted finite breakpoints, then the
// mapped tail (last breakpoint, inf) unless the domain is truncated at d.
template <class Real, class F>
void integrate_pieces(const F& f, const std::vector<Real>& pts, bool add_tail,
                      Real rel_tol, Real abs_tol, int max_depth,
                      Real& value, Real& error, long& panels, bool& budget_hit) {
    // first pass for a magnitude estimate
    Real rough = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        rough += std::fabs(gk15<Real>(f, pts[i], pts[i + 1]).integral);
    const Real L = pts.back();
    auto tail = [&](Real u) {
        const Real om = 1 - u;
        const Real y = L + u / om;
        return f(y) / (om * om);
    };
    if (add_tail) rough += std::fabs(gk15<Real>(tail, (Real)0, (Real)1).integral);

    const Real tol_total = std::max(abs_tol, rel_tol * rough);
    const std::size_t npieces = (pts.size() - 1) + (add_tail ? 1 : 0);
    const Real tol_piece = tol_total / (Real)npieces;

    Adaptive<Real, F> ad{f, max_depth, abs_tol, 0, 0, 0, false};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        ad.run(pts[i], pts[i + 1], tol_piece, 0);
    value = ad.value;
    error = ad.error;
    panels = ad.panels;
    budget_hit = ad.budget_hit;
    if (add_tail) {
        Adaptive<Real, decltype(tail)> at{tail, max_depth, abs_tol, 0, 0, 0, false};
        at.run((Real)0, (Real)1, tol_piece, 0);
        value += at.value;
        error += at.error;
        panels += at.panels;
        budget_hit = budget_hit || at.budget_hit;
    }
}

// log of the integrand without the resonance denominator handled separately
template <class Real>
Real log_integrand(const IntegralParams& p, Real y) {
    Real lg = 0;
    if (p.nu != 0) lg += (Real)p.nu * std::log(y);
    lg -= (Real)p.a * y;
    if (p.z != 0) {
        const Real yb = p.screening_t ? y + (Real)*p.screening_t : y;
        lg -= (Real)p.z * std::pow(yb, -(Real)p.rho);
    }
    if (p.depletion) lg -= (Real)p.depletion->b * std::pow(y, (Real)p.depletion->delta);
    if (p.resonance) {
        const Real dy = (Real)p.resonance->c - y;
        lg -= (Real)p.resonance->pow * std::log(dy * dy + (Real)p.resonance->g * (Real)p.resonance->g);
    }
    return lg;
}

template <class Real>
Real eval_integrand(const IntegralParams& p, Real y) {
    if (y < 0) return 0;
    if (y == 0) {
        if (p.z > 0) return 0;
        if (p.nu > 0) return 0;
        if (p.nu < 0) return std::numeric_limits<Real>::infinity();
        Real v = 1;
        if (p.resonance) {
            const Real den = (Real)p.resonance->c * (Real)p.resonance->c +
                             (Real)p.resonance->g * (Real)p.resonance->g;
            v = std::pow(den, -(Real)p.resonance->pow);
        }
        return v;
    }
    const Real lg = log_integrand<Real>(p, y);
    return std::exp(lg);
}

template <class Real>
Real find_peak(const IntegralParams& p, Real hi) {
    // coarse scan in log y, then golden-section refinement
    const Real lo = (Real)1e-18;
    const Real ulo = std::log(lo), uhi = std::log(hi);
    const int N = 240;
    int best = 0;
    Real best_v = -std::numeric_limits<Real>::infinity();
    for (int i = 0; i <= N; ++i) {
        const Real u = ulo + (uhi - ulo) * i / N;
        const Real v = log_integrand<Real>(p, std::exp(u));
        if (v > best_v) { best_v = v; best = i; }
    }
    Real a = ulo + (uhi - ulo) * std::max(0, best - 1) / N;
    Real b = ulo + (uhi - ulo) * std::min(N, best + 1) / N;
    const Real gr = (Real)0.6180339887498949;
    Real x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    Real f1 = log_integrand<Real>(p, std::exp(x1));
    Real f2 = log_integrand<Real>(p, std::exp(x2));
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a);
            f2 = log_integrand<Real>(p, std::exp(x2));
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a);
            f1 = log_integrand<Real>(p, std::exp(x1));
        }
    }
    return std::exp((a + b) / 2);
}

template <class Real>
std::vector<Real> split_points(const IntegralParams& p, Real peak, Real hi) {
    std::vector<Real> pts{0};
    auto push = [&](Real x) {
        if (x > 0 && x < hi) pts.push_back(x);
    };
    push(peak / 8);
    push(peak / 2);
    push(peak);
    push(3 * peak);
    push(8 * peak);
    if (p.resonance) {
        const Real c = (Real)p.resonance->c;
        const Real g = std::fabs((Real)p.resonance->g);
        push(c - g);
        push(c);
        push(c + g);
    }
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

template <class Real>
EvalResult oracle_impl(IntegralKind kind, const IntegralParams& params,
                       const QuadratureControl& ctl) {
    detail::check_control(ctl);
    const IntegralParams p = validate(kind, params);

    const bool finite = p.cutoff_d.has_value();
    Real hi;
    Real peak;
    if (finite) {
        hi = (Real)*p.cutoff_d;
        peak = find_peak<Real>(p, hi);
    } else {
        // truncate where the log-integrand has dropped ~80 e-folds below the
        // peak; the mapped tail picks up the (negligible but integrated) rest
        peak = find_peak<Real>(p, (Real)1e12);
        const Real target = log_integrand<Real>(p, peak) - 80;
        Real L = std::max(peak * 4, (Real)1);
        if (p.resonance)
            L = std::max(L, (Real)p.resonance->c + 8 * std::fabs((Real)p.resonance->g));
        while (log_integrand<Real>(p, L) > target && L < (Real)1e30) L *= 2;
        hi = L;
    }

    auto f = [&](Real y) { return eval_integrand<Real>(p, y); };

    // head transform for an endpoint singularity y^nu, nu in (-1,0), z = 0:
    // v = y^(nu+1)/(nu+1) turns y^nu dy into dv with a bounded integrand
    Real head_value = 0, head_error = 0;
    long head_panels = 0;
    std::vector<Real> pts = split_points<Real>(p, peak, hi);
    if (p.z == 0 && p.nu < 0 && p.nu > -1) {
        if (pts.size() == 2) pts.insert(pts.begin() + 1, hi / 2);
        const Real s = pts[1];
        const Real q = (Real)p.nu + 1;
        auto fh = [&](Real v) {
            const Real y = std::pow(q * v, 1 / q);
            return f(y) * std::pow(y, -(Real)p.nu);
        };
        bool dummy = false;
        std::vector<Real> hp{0, std::pow(s, q) / q};
        integrate_pieces<Real>(fh, hp, false, (Real)ctl.rel_tol, (Real)ctl.abs_tol,
                               ctl.max_depth, head_value, head_error, head_panels, dummy);
        pts.erase(pts.begin());  // drop the 0 endpoint; head already covered
    }

    Real value = 0, error = 0;
    long panels = 0;
    bool budget_hit = false;
    integrate_pieces<Real>(f, pts, !finite, (Real)ctl.rel_tol, (Real)ctl.abs_tol,
                           ctl.max_depth, value, error, panels, budget_hit);
    value += head_value;
    error += head_error;
    panels += head_panels;

    EvalResult out;
    out.value = (double)value;
    out.abs_error = (double)error;
    out.method = Method::quadrature;
    out.terms_used = (std::size_t)panels;
    const double tol = std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(out.value));
    if (budget_hit && out.abs_error > tol)
        throw NonConvergenceError("oracle_eval: max_depth exhausted with residual above tolerance");
    return out;
}

} // namespace

namespace detail {

void check_control(const QuadratureControl& ctl) {
    if (!(ctl.rel_tol >= 1e-14)) throw DomainError("QuadratureControl.rel_tol must be >= 1e-14");
    if (!(ctl.abs_tol > 0)) throw DomainError("QuadratureControl.abs_tol must be positive");
    if (!(ctl.max_depth > 0 && ctl.max_depth <= 60))
        throw DomainError("QuadratureControl.max_depth must be in (0, 60]");
}

double integrate_tail(double nu_exp, double a, double z, double rho,
                      double lower, const QuadratureControl& ctl) {
    check_control(ctl);
    if (!(lower > 0)) throw DomainError("integrate_tail: lower must be positive");
    using Real = double;
    auto logf = [&](Real y) {
        Real lg = nu_exp * std::log(y) - a * y;
        if (z != 0) lg -= z * std::pow(y, -rho);
        return lg;
    };
    auto f = [&](Real y) { return std::exp(logf(y)); };

    // integrand on (lower, inf) is log-concave-ish with peak possibly left of
    // lower; pick the larger of lower and the unconstrained peak
    Real peak = lower;
    {
        Real bestu = std::log(lower);
        Real bestv = logf(lower);
        for (int i = 1; i <= 200; ++i) {
            const Real u = std::log(lower) + i * 0.08;
            const Real v = logf(std::exp(u));
            if (v > bestv) { bestv = v; bestu = u; }
        }
        peak = std::exp(bestu);
    }
    const Real target = logf(peak) - 80;
    Real L = std::max(peak * 4, lower * 2);
    while (logf(L) > target && L < 1e30) L *= 2;

    std::vector<Real> pts{lower};
    for (Real x : {peak / 2, peak, 3 * peak, 8 * peak})
        if (x > lower && x < L) pts.push_back(x);
    pts.push_back(L);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Real value = 0, error = 0;
    long panels = 0;
    bool budget_hit = false;
    integrate_pieces<Real>(f, pts, true, (Real)ctl.rel_tol, (Real)ctl.abs_tol,
                           ctl.max_depth, value, error, panels, budget_hit);
    if (budget_hit && error > std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(value)))
        throw NonConvergenceError("integrate_tail: residual above tolerance");
    return value;
}

double peak_location(IntegralKind kind, const IntegralParams& params, double hi) {
    const IntegralParams p = validate(kind, params);
    return (double)find_peak<double>(p, hi);
}

double integrate_function(const std::function<double(double)>& f,
                          const std::vector<double>& breakpoints, bool add_tail,
                          const QuadratureControl& ctl) {
    check_control(ctl);
    if (breakpoints.size() < 2) throw DomainError("integrate_function: need >= 2 breakpoints");
    double value = 0, error = 0;
    long panels = 0;
    bool budget_hit = false;
    auto g = [&](double y) { return f(y); };
    integrate_pieces<double>(g, breakpoints, add_tail, ctl.rel_tol, ctl.abs_tol,
                             ctl.max_depth, value, error, panels, budget_hit);
    if (budget_hit && error > std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(value)))
        throw NonConvergenceError("integrate_function: residual above tolerance");
    return value;
}

} // namespace detail

double integrand(IntegralKind kind, const IntegralParams& params, double y) {
    const IntegralParams p = validate(kind, params);
    return eval_integrand<double>(p, y);
}

EvalResult oracle_eval(IntegralKind kind, const IntegralParams& params,
                       const QuadratureControl& ctl) {
    return oracle_impl<double>(kind, params, ctl);
}

EvalResult oracle_eval_precise(IntegralKind kind, const IntegralParams& params,
                               const QuadratureControl& ctl) {
    return oracle_impl<long double>(kind, params, ctl);
}

} // namespace gamow
