#include "gamow/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "gamow/cli.hpp"
#include "gamow/rates.hpp"
#include "gamow/sweep.hpp"

namespace gamow::selftest {

namespace {

using clock_type = std::chrono::steady_clock;

double rel_err(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

struct Checker {
    CheckResult r;
    clock_type::time_point t0 = clock_type::now();

    explicit Checker(std::string name) { r.name = std::move(name); r.pass = true; }

    void expect(double err, double tol, const std::string& what) {
        if (err > r.worst) r.worst = err;
        if (!(err <= tol)) {
            r.pass = false;
            if (!r.note.empty()) r.note += "; ";
            r.note += what + " err=" + std::to_string(err) + " > tol=" + std::to_string(tol);
        }
    }
    void expect_true(bool ok, const std::string& what) {
        if (!ok) {
            r.pass = false;
            if (!r.note.empty()) r.note += "; ";
            r.note += what;
        }
    }
    CheckResult done() {
        r.seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
        return r;
    }
};

IntegralParams base(double nu, double a, double z) {
    IntegralParams p;
    p.nu = nu;
    p.a = a;
    p.z = z;
    p.rho = 0.5;
    return p;
}

// 1. oracle reproduces the z=0 closed forms
CheckResult check_analytic_anchors() {
    Checker c("1 analytic anchors: oracle vs z=0 closed forms");
    const double nus[] = {0, 0.25, 1, 2.2};
    const double as[] = {0.5, 1, 2};
    for (double nu : nus)
        for (double a : as) {
            const double exact = gamma_fn(nu + 1) / std::pow(a, nu + 1);
            const auto r = oracle_eval(IntegralKind::I1, base(nu, a, 0));
            c.expect(rel_err(r.value, exact), 1e-10, "I1 closed form");
            for (double d : {0.5, 2.0}) {
                IntegralParams p = base(nu, a, 0);
                p.cutoff_d = d;
                const double exact2 = lower_gamma(nu + 1, a * d) / std::pow(a, nu + 1);
                const auto r2 = oracle_eval(IntegralKind::I2, p);
                c.expect(rel_err(r2.value, exact2), 1e-10, "I2 incomplete gamma");
            }
        }
    return c.done();
}

// 2. infinite-limit residue series vs oracle on the 75-point grid
CheckResult check_infinite_series() {
    Checker c("2 series-oracle equivalence (infinite limit, 75 points)");
    const double nus[] = {0.1, 0.25, 0.75, 1.3, 2.2};
    const double as[] = {0.5, 1, 2};
    const double zs[] = {0.5, 1, 2, 5, 10};
    for (double nu : nus)
        for (double a : as)
            for (double z : zs) {
                const auto s = i2_infinite_series(nu, a, z);
                const auto o = oracle_eval(IntegralKind::I1, base(nu, a, z));
                c.expect(rel_err(s.value, o.value), 1e-7, "grid point");
                c.expect_true(s.converged, "series converged");
            }
    return c.done();
}

// 3. finite-limit series vs oracle (v^{nu-1} convention)
CheckResult check_finite_series() {
    Checker c("3 finite-limit series vs oracle");
    const double nus[] = {0.3, 1.3, 2.2};
    const double zs[] = {0.5, 1, 2};
    const double ds[] = {0.5, 1, 5};
    for (double nu : nus)
        for (double z : zs)
            for (double d : ds) {
                const auto s = i2_finite_series(nu, 1.0, z, d);
                IntegralParams p = base(nu - 1.0, 1.0, z);
                p.cutoff_d = d;
                const auto o = oracle_eval(IntegralKind::I2, p);
                c.expect(rel_err(s.value, o.value), 1e-6, "grid point");
            }
    return c.done();
}

// 4. reduction formulae: pinned 20-point in-window grid + fallback checks
CheckResult check_reductions() {
    Checker c("4 reductions vs oracle (20-point grid + out-of-window fallback)");

    struct I3Row { double nu, a, z, b, delta; };
    const I3Row i3rows[] = {
        {0.25, 1, 1, 0.001, 2}, {0.25, 1, 1, 0.01, 2}, {1.3, 1, 2, 0.01, 1},
        {0.25, 2, 5, 0.05, 0.5}, {2.2, 1, 0.5, 0.001, 2},
    };
    for (const auto& row : i3rows) {
        IntegralParams p = base(row.nu, row.a, row.z);
        p.depletion = Depletion{row.b, row.delta};
        const auto s = i3_eval(p);
        const auto o = oracle_eval(IntegralKind::I3, p);
        c.expect(rel_err(s.value, o.value), 1e-5, "i3 grid");
        c.expect_true(s.method == Method::series, "i3 used the series");
    }

    struct I4Row { double nu, z, t; };
    const I4Row i4rows[] = {{0, 1, 1}, {1, 1, 1}, {2, 2, 0.5}, {0, 1, 5}};
    for (const auto& row : i4rows) {
        IntegralParams p = base(row.nu, 1.0, row.z);
        p.screening_t = row.t;
        const auto s = i4_eval(p);
        const auto o = oracle_eval(IntegralKind::I4, p);
        c.expect(rel_err(s.value, o.value), 1e-5, "i4 grid");
        c.expect_true(s.terms_used == (std::size_t)row.nu + 1, "i4 term count nu+1");
    }

    struct ResRow { double nu, a, z, c, g, pw, b, delta; };
    const ResRow i5rows[] = {
        {0.25, 1, 0.9, 1, 15, 1, 0, 0}, {0.25, 1, 2, 1, 16, 1, 0, 0},
        {1.3, 1, 1, 1, 16, 1, 0, 0},    {0, 1, 2, 1, 16, 1, 0, 0},
        {0, 1, 1, 1, 18, 1, 0, 0},      {0.25, 2, 1, 0.5, 8, 1, 0, 0},
        {1.3, 2, 2, 0.5, 9, 1, 0, 0},
    };
    for (const auto& row : i5rows) {
        IntegralParams p = base(row.nu, row.a, row.z);
        p.resonance = Resonance{row.c, row.g, 1.0};
        const auto s = i5_eval(p);
        const auto o = oracle_eval(IntegralKind::I5, p);
        c.expect(rel_err(s.value, o.value), 1e-5, "i5 grid");
        c.expect_true(s.method == Method::series, "i5 used the series");
    }

    const ResRow i7rows[] = {
        {0.25, 2, 1, 0.5, 9, 2, 0, 0},
        {0, 1, 2, 1, 16, 2, 0, 0},
        {0.25, 1, 0.9, 1, 15, 1, 0.01, 1},
        {0, 1, 1, 1, 18, 1, 0.02, 2},
    };
    for (const auto& row : i7rows) {
        IntegralParams p = base(row.nu, row.a, row.z);
        p.resonance = Resonance{row.c, row.g, row.pw};
        if (row.b != 0) p.depletion = Depletion{row.b, row.delta};
        const auto s = i7_eval(p);
        const auto o = oracle_eval(IntegralKind::I7, p);
        c.expect(rel_err(s.value, o.value), 1e-5, "i7 grid");
        c.expect_true(s.method == Method::series, "i7 used the series");
    }

    // out-of-window inputs fall back to quadrature; compare against the
    // long-double rerun at tighter tolerance
    const ResRow outrows[] = {
        {0, 1, 30, 1, 2, 1, 0, 0},    // z above the upper bound
        {0, 1, 1, 5, 1, 1, 0, 0},     // c outside the c window
        {0.25, 1, 0.1, 1, 0.5, 1, 0, 0},  // z below the lower bound
    };
    for (const auto& row : outrows) {
        IntegralParams p = base(row.nu, row.a, row.z);
        p.resonance = Resonance{row.c, row.g, 1.0};
        const auto s = i5_eval(p);
        c.expect_true(s.method == Method::quadrature, "out-of-window fallback");
        const auto o = oracle_eval_precise(IntegralKind::I5, p);
        c.expect(rel_err(s.value, o.value), 1e-8, "fallback vs precise oracle");
    }
    return c.done();
}

// 5. asymptotics: monotone improvement, <5% at z=200, I7/I5 identity
CheckResult check_asymptotics() {
    Checker c("5 asymptotics: monotone error, <5% at z=200, I7/I5 identity");
    const double zs[] = {20, 50, 100, 200};

    auto run_case = [&](IntegralKind kind, IntegralParams p, const char* what) {
        double prev = 1e300;
        for (double z : zs) {
            p.z = z;
            const auto a = asymptotic_eval(kind, p);
            const auto o = oracle_eval(kind, p);
            const double err = rel_err(a.value, o.value);
            c.expect_true(std::isfinite(err), std::string(what) + " finite error");
            c.expect_true(err < prev, std::string(what) + " error decreasing at z=" +
                                         std::to_string((int)z));
            prev = err;
            if (z == 200) c.expect(err, 0.05, std::string(what) + " final error");
        }
    };

    run_case(IntegralKind::I1, base(0, 1, 0), "I1");
    {
        IntegralParams p = base(0, 1, 0);
        p.cutoff_d = 1.0;
        run_case(IntegralKind::I2, p, "I2");
    }
    {
        IntegralParams p = base(0, 1, 0);
        p.depletion = Depletion{0.001, 1};
        run_case(IntegralKind::I3, p, "I3");
    }
    {
        IntegralParams p = base(0, 1, 0);
        p.screening_t = 1.0;
        run_case(IntegralKind::I4, p, "I4");
    }
    {
        IntegralParams p = base(0, 1, 0);
        p.resonance = Resonance{1, 8, 1};
        run_case(IntegralKind::I5, p, "I5");
    }

    // exact algebra: I7 at pow=1, no depletion vs I5, both closed forms
    {
        IntegralParams p = base(0.25, 1, 20);
        p.resonance = Resonance{1, 8, 1};
        const auto a5 = asymptotic_eval(IntegralKind::I5, p);
        const auto a7 = asymptotic_eval(IntegralKind::I7, p);
        c.expect(rel_err(a7.value, a5.value), 1e-12, "I7/I5 1F0-eta identity");
    }
    return c.done();
}

// 6. gamma duplication and Pochhammer identities on random points
CheckResult check_special_identities() {
    Checker c("6 gamma duplication + Pochhammer identities (50 random points)");
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> ux(0.1, 20.0);
    const double log2 = std::log(2.0), log2pi = std::log(2.0 * 3.14159265358979323846);
    for (int i = 0; i < 50; ++i) {
        const double x = ux(rng);
        const double lhs = log_gamma(2 * x).log_abs;
        const double rhs = -0.5 * log2pi + (2 * x - 0.5) * log2 + log_gamma(x).log_abs +
                           log_gamma(x + 0.5).log_abs;
        c.expect(std::fabs(lhs - rhs), 1e-10, "duplication");
    }
    std::uniform_real_distribution<double> ua(-3.0, 5.0);
    std::uniform_int_distribution<int> un(0, 20);
    for (int i = 0; i < 50; ++i) {
        const double a = ua(rng);
        const int m = un(rng), n = un(rng);
        const double lhs = pochhammer(a, (std::size_t)(m + n));
        const double rhs = pochhammer(a, (std::size_t)m) * pochhammer(a + m, (std::size_t)n);
        const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
        c.expect(std::fabs(lhs - rhs) / scale, 1e-10, "pochhammer split");
    }
    return c.done();
}

// 7. physical pinning: y = E/kT vs direct E-space quadrature; limit checks
CheckResult check_physical() {
    Checker c("7 physical pinning: E-space oracle, screened/cutoff limits");
    const Constants& k = constants();

    ReactionSystem sys;
    sys.zi = sys.zj = 1;
    sys.mi = sys.mj = 1;
    sys.s0 = 1;
    sys.same_species = true;

    const double temps[] = {1e6, 3.16e6, 1e7, 3.16e7, 1e8};
    for (double T : temps) {
        sys.temperature = T;
        const RateResult ry = nonresonant_rate(sys, {});

        // direct E-space integral of E sigma(E) e^{-E/kT}, sigma = S/E e^{-2 pi eta}
        const double mu = reduced_mass(sys);
        const double kT = k.k_boltzmann * T;
        const double q = 2.0 * 3.14159265358979323846 * std::sqrt(mu / 2.0) *
                         k.e_squared / k.planck_h;  // 2 pi eta = q / sqrt(E)
        const double S0 = sys.s0 * k.keV_erg * k.barn_cm2;
        auto f = [&](double E) {
            return S0 * std::exp(-E / kT - q / std::sqrt(E));
        };
        const double E0 = std::pow(q * kT / 2.0, 2.0 / 3.0);
        std::vector<double> pts{0, E0 / 4, E0, 4 * E0, 40 * kT + 12 * E0};
        QuadratureControl qc;
        qc.rel_tol = 1e-12;
        const double integral = detail::integrate_function(f, pts, true, qc);
        const double r_direct = 0.5 * std::sqrt(8.0 / (3.14159265358979323846 * mu)) *
                                std::pow(kT, -1.5) * integral;
        c.expect(rel_err(ry.rate, r_direct), 1e-8, "E-space pinning");
    }

    sys.temperature = 1.5e7;
    const RateResult bare = nonresonant_rate(sys, {});
    RateModeSpec screened{RateMode::screened};
    screened.U_e = 1e-10;  // keV
    c.expect(rel_err(nonresonant_rate(sys, screened).rate, bare.rate), 1e-6, "U_e -> 0");
    RateModeSpec cut{RateMode::cutoff};
    cut.d = 50;
    c.expect(rel_err(nonresonant_rate(sys, cut).rate, bare.rate), 1e-6, "d -> inf");
    return c.done();
}

// 8. CLI determinism: byte-identical CSV on repeated runs
CheckResult check_cli_determinism() {
    Checker c("8 CLI determinism: compare/rate-table byte-identical CSV");
    const std::vector<std::string> cmp = {"compare", "--kind", "I1", "--nu", "0.25",
                                          "--a", "1", "--z", "1", "--format", "csv"};
    const auto c1 = cli::run(cmp);
    const auto c2 = cli::run(cmp);
    c.expect_true(c1.exit_code == 0 && c1.out == c2.out, "compare CSV repeatable");

    const std::vector<std::string> rt = {
        "rate-table", "--zi", "1", "--zj", "1", "--mi", "1", "--mj", "1",
        "--s0", "1", "--tmin", "1e6", "--tmax", "1e8", "--n", "5",
        "--same-species", "--format", "csv"};
    const auto r1 = cli::run(rt);
    const auto r2 = cli::run(rt);
    c.expect_true(r1.exit_code == 0 && r1.out == r2.out, "rate-table CSV repeatable");

    // parallel sweep must agree bit-for-bit with the serial reference
    std::vector<SweepJob> jobs;
    for (double nu : {0.1, 0.25, 1.3})
        for (double z : {0.5, 1.0, 2.0}) {
            SweepJob j;
            j.params = base(nu, 1.0, z);
            jobs.push_back(j);
        }
    const auto a = eval_grid_serial(jobs);
    const auto b = eval_grid_parallel(jobs);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
        same = a[i].value == b[i].value && a[i].method == b[i].method;
    c.expect_true(same, "parallel sweep bitwise equal to serial");
    return c.done();
}

} // namespace

std::vector<CheckResult> run_all() {
    return {
        check_analytic_anchors(), check_infinite_series(), check_finite_series(),
        check_reductions(),       check_asymptotics(),     check_special_identities(),
        check_physical(),         check_cli_determinism(),
    };
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string format_line(const CheckResult& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "[%s] %s (worst=%.3g, t=%.2fs)",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.seconds);
    std::string line = buf;
    if (!r.note.empty()) line += "\n       " + r.note;
    return line;
}

} // namespace gamow::selftest
