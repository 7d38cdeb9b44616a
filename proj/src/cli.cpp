#include "gamow/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamow/rates.hpp"
#include "gamow/selftest.hpp"
#include "gamow/sweep.hpp"

namespace gamow::cli {

namespace {

using json = nlohmann::ordered_json;

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += "\"\"";
        else q += ch;
    }
    return q + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

// flag bundle shared by eval and compare
struct ParamFlags {
    std::string kind_str;
    double nu = 0, a = 1, z = 0, rho = 0.5;
    double d = 0, b = 0, delta = 0, t = 0, c = 0, g = 0, pw = 1;
    CLI::Option *od = nullptr, *ob = nullptr, *odelta = nullptr, *ot = nullptr,
                *oc = nullptr, *og = nullptr, *opw = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kind", kind_str, "integral kind I1..I7")->required();
        cmd->add_option("--nu", nu, "power of y");
        cmd->add_option("--a", a, "linear decay rate (a > 0)");
        cmd->add_option("--z", z, "barrier strength (z >= 0)");
        cmd->add_option("--rho", rho, "barrier exponent (rho > 0)");
        od = cmd->add_option("--d", d, "finite upper limit (I2)");
        ob = cmd->add_option("--b", b, "depletion strength (I3/I6/I7)");
        odelta = cmd->add_option("--delta", delta, "depletion exponent");
        ot = cmd->add_option("--t", t, "screening shift (I4)");
        oc = cmd->add_option("--c", c, "resonance center (I5/I6/I7)");
        og = cmd->add_option("--g", g, "resonance width");
        opw = cmd->add_option("--pow", pw, "resonance denominator power (I7)");
    }

    std::pair<IntegralKind, IntegralParams> build() const {
        const auto kind = kind_from_string(kind_str);
        if (!kind) throw DomainError("unknown --kind '" + kind_str + "' (expect I1..I7)");
        IntegralParams p;
        p.nu = nu;
        p.a = a;
        p.z = z;
        p.rho = rho;
        if (od->count()) p.cutoff_d = d;
        if (ob->count() || odelta->count()) p.depletion = Depletion{b, delta};
        if (ot->count()) p.screening_t = t;
        if (oc->count() || og->count()) p.resonance = Resonance{c, g, pw};
        return {*kind, validate(*kind, p)};
    }

    json config_json() const {
        json cfg;
        cfg["kind"] = kind_str;
        cfg["nu"] = nu;
        cfg["a"] = a;
        cfg["z"] = z;
        cfg["rho"] = rho;
        if (od->count()) cfg["d"] = d;
        if (ob->count()) cfg["b"] = b;
        if (odelta->count()) cfg["delta"] = delta;
        if (ot->count()) cfg["t"] = t;
        if (oc->count()) cfg["c"] = c;
        if (og->count()) cfg["g"] = g;
        if (opw->count()) cfg["pow"] = pw;
        return cfg;
    }
};

json result_json(const EvalResult& r) {
    json row;
    row["value"] = r.value;
    row["abs_error"] = r.abs_error;
    row["method"] = to_string(r.method);
    row["terms_used"] = r.terms_used;
    row["converged"] = r.converged;
    row["warnings"] = r.warnings;
    return row;
}

std::string render_json(const json& cfg, const json& rows) {
    json doc;
    doc["config"] = cfg;
    doc["constants_version"] = constants().version;
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

int run_eval(const ParamFlags& pf, const std::string& method_str,
             const std::string& format, double rel_tol, RunOutput& io) {
    const auto [kind, params] = pf.build();
    EvalOptions opts;
    if (rel_tol > 0) opts.reduction.series.rel_tol = rel_tol;
    if (method_str == "quadrature") opts.force = Method::quadrature;
    else if (method_str == "series") opts.force = Method::series;
    else if (method_str == "asymptotic") opts.force = Method::asymptotic;
    else if (method_str != "auto") throw DomainError("unknown --method '" + method_str + "'");

    const EvalResult r = evaluate(kind, params, opts);

    if (format == "json") {
        json cfg = pf.config_json();
        cfg["command"] = "eval";
        cfg["method"] = method_str;
        io.out = render_json(cfg, json::array({result_json(r)}));
    } else if (format == "csv") {
        std::ostringstream os;
        os << "value,abs_error,method,terms_used,converged,warnings\n"
           << num17(r.value) << ',' << num17(r.abs_error) << ',' << to_string(r.method)
           << ',' << r.terms_used << ',' << (r.converged ? "true" : "false") << ','
           << csv_quote(join(r.warnings, "; ")) << '\n';
        io.out = os.str();
    } else {
        std::ostringstream os;
        os << "value      = " << num17(r.value) << '\n'
           << "abs_error  = " << num17(r.abs_error) << '\n'
           << "method     = " << to_string(r.method) << '\n'
           << "terms_used = " << r.terms_used << '\n'
           << "converged  = " << (r.converged ? "true" : "false") << '\n';
        if (r.method == Method::asymptotic)
            os << "note       = asymptotic output is a leading-order estimate\n";
        for (const auto& w : r.warnings) os << "warning    : " << w << '\n';
        io.out = os.str();
    }
    return r.converged ? 0 : 2;
}

struct CompareRow {
    std::string method;
    bool available = false;
    EvalResult result;
    std::string note;
};

int run_compare(const ParamFlags& pf, const std::string& format, RunOutput& io) {
    const auto [kind, params] = pf.build();

    std::vector<CompareRow> rows(3);
    rows[0].method = "quadrature";
    rows[1].method = "series";
    rows[2].method = "asymptotic";

    rows[0].result = oracle_eval(kind, params);
    rows[0].available = true;

    try {
        EvalOptions opts;
        opts.force = Method::series;
        EvalResult r = evaluate(kind, params, opts);
        if (r.method == Method::series) {
            rows[1].available = true;
            rows[1].result = r;
        } else {
            rows[1].note = r.warnings.empty() ? "series path fell back to quadrature"
                                              : r.warnings.front();
        }
    } catch (const Error& e) {
        rows[1].note = e.what();
    }

    try {
        rows[2].result = asymptotic_eval(kind, params);
        rows[2].available = true;
    } catch (const Error& e) {
        rows[2].note = e.what();
    }

    const double ref = rows[0].result.value;
    auto dev = [&](const CompareRow& r) {
        return std::fabs(r.result.value - ref) / std::fabs(ref);
    };

    if (format == "json") {
        json cfg = pf.config_json();
        cfg["command"] = "compare";
        json jr = json::array();
        for (const auto& r : rows) {
            json row;
            row["method"] = r.method;
            if (r.available) {
                row["value"] = r.result.value;
                row["abs_error"] = r.result.abs_error;
                row["rel_dev_vs_quadrature"] = dev(r);
                row["terms_used"] = r.result.terms_used;
                row["converged"] = r.result.converged;
            } else {
                row["value"] = nullptr;
                row["note"] = r.note;
            }
            jr.push_back(row);
        }
        io.out = render_json(cfg, jr);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "method,value,abs_error,rel_dev_vs_quadrature,terms_used,converged,note\n";
        for (const auto& r : rows) {
            if (r.available)
                os << r.method << ',' << num17(r.result.value) << ','
                   << num17(r.result.abs_error) << ',' << num17(dev(r)) << ','
                   << r.result.terms_used << ',' << (r.result.converged ? "true" : "false")
                   << ',' << csv_quote(join(r.result.warnings, "; ")) << '\n';
            else
                os << r.method << ",n/a,n/a,n/a,0,false," << csv_quote(r.note) << '\n';
        }
        io.out = os.str();
    } else {
        std::ostringstream os;
        for (const auto& r : rows) {
            os << r.method << ":\n";
            if (r.available) {
                os << "  value = " << num17(r.result.value)
                   << "  (rel dev vs quadrature " << num17(dev(r)) << ")\n";
            } else {
                os << "  n/a (" << r.note << ")\n";
            }
        }
        io.out = os.str();
    }
    return 0;
}

struct RateRow {
    double T = 0;
    RateResult result;
    bool ok = false;
    std::string error;
};

int run_rate_table(const ReactionSystem& base_sys, const RateModeSpec& mode,
                   double tmin, double tmax, int n, const std::string& format,
                   const json& cfg_in, RunOutput& io) {
    if (!(n >= 2)) throw DomainError("rate-table: --n must be >= 2");
    if (!(tmin > 0) || !(tmin < tmax)) throw DomainError("rate-table: need 0 < tmin < tmax");

    std::vector<RateRow> rows(n);
    const double l0 = std::log(tmin), l1 = std::log(tmax);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        rows[i].T = std::exp(l0 + (l1 - l0) * i / (n - 1));
        try {
            ReactionSystem sys = base_sys;
            sys.temperature = rows[i].T;
            rows[i].result = nonresonant_rate(sys, mode);
            rows[i].ok = true;
        } catch (const Error& e) {
            rows[i].error = e.what();
        }
    }

    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.ok;

    if (format == "json") {
        json jr = json::array();
        for (const auto& r : rows) {
            json row;
            row["T"] = r.T;
            if (r.ok) {
                row["z"] = r.result.z;
                row["N0"] = r.result.N[0];
                row["N1"] = r.result.N[1];
                row["N2"] = r.result.N[2];
                row["rate"] = r.result.rate;
                row["rate_unsym"] = r.result.rate_unsym;
            } else {
                row["error"] = r.error;
            }
            jr.push_back(row);
        }
        io.out = render_json(cfg_in, jr);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "T,z,N0,N1,N2,rate,rate_unsym\n";
        for (const auto& r : rows) {
            if (r.ok)
                os << num17(r.T) << ',' << num17(r.result.z) << ',' << num17(r.result.N[0])
                   << ',' << num17(r.result.N[1]) << ',' << num17(r.result.N[2]) << ','
                   << num17(r.result.rate) << ',' << num17(r.result.rate_unsym) << '\n';
            else
                os << num17(r.T) << ",error,,,,," << csv_quote(r.error) << '\n';
        }
        io.out = os.str();
    } else {
        std::ostringstream os;
        os << "T [K]           z            rate [cm^-3 s^-1]   rate (no 1/(1+dij))\n";
        for (const auto& r : rows) {
            if (r.ok) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "%-15.6g %-12.6g %-19.10g %-19.10g\n", r.T,
                              r.result.z, r.result.rate, r.result.rate_unsym);
                os << buf;
            } else {
                os << r.T << "  error: " << r.error << '\n';
            }
        }
        io.out = os.str();
    }
    return all_ok ? 0 : 2;
}

} // namespace

RunOutput run(const std::vector<std::string>& args) {
    RunOutput io;

    CLI::App app{"thermonuclear reaction probability integrals"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one integral");
    ParamFlags eval_pf;
    eval_pf.attach(eval_cmd);
    std::string eval_method = "auto", eval_format = "text";
    double eval_rel_tol = 0, eval_quad_tol = 0;
    eval_cmd->add_option("--method", eval_method, "auto|quadrature|series|asymptotic");
    eval_cmd->add_option("--format", eval_format, "text|csv|json");
    eval_cmd->add_option("--rel-tol", eval_rel_tol, "series relative tolerance");
    eval_cmd->add_option("--quad-rel-tol", eval_quad_tol, "quadrature relative tolerance");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "evaluate by all applicable methods");
    ParamFlags cmp_pf;
    cmp_pf.attach(cmp_cmd);
    std::string cmp_format = "text";
    cmp_cmd->add_option("--format", cmp_format, "text|csv|json");

    // rate-table
    auto* rt_cmd = app.add_subcommand("rate-table", "temperature sweep of the reaction rate");
    ReactionSystem sys;
    RateModeSpec mode;
    std::string mode_str = "bare", rt_format = "text";
    double tmin = 1e6, tmax = 1e8;
    int npts = 10;
    rt_cmd->add_option("--zi", sys.zi, "charge number i")->check(CLI::PositiveNumber);
    rt_cmd->add_option("--zj", sys.zj, "charge number j")->check(CLI::PositiveNumber);
    rt_cmd->add_option("--mi", sys.mi, "mass i (amu)");
    rt_cmd->add_option("--mj", sys.mj, "mass j (amu)");
    rt_cmd->add_option("--ni", sys.ni, "number density i (cm^-3)");
    rt_cmd->add_option("--nj", sys.nj, "number density j (cm^-3)");
    rt_cmd->add_flag("--same-species", sys.same_species, "apply the identical-particle factor");
    rt_cmd->add_option("--s0", sys.s0, "S(0) (keV barn)");
    rt_cmd->add_option("--s1", sys.s1, "S'(0) (barn)");
    rt_cmd->add_option("--s2", sys.s2, "S''(0) (barn/keV)");
    rt_cmd->add_option("--tmin", tmin, "lowest temperature (K)");
    rt_cmd->add_option("--tmax", tmax, "highest temperature (K)");
    rt_cmd->add_option("--n", npts, "number of grid points (log-spaced)");
    rt_cmd->add_option("--mode", mode_str, "bare|cutoff|depleted|screened");
    rt_cmd->add_option("--d", mode.d, "cutoff (units of kT)");
    rt_cmd->add_option("--b", mode.b, "depletion strength");
    rt_cmd->add_option("--delta", mode.delta, "depletion exponent");
    rt_cmd->add_option("--ue", mode.U_e, "screening energy (keV)");
    rt_cmd->add_option("--format", rt_format, "text|csv|json");

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "run the built-in verification matrix");

    std::vector<const char*> argv;
    argv.push_back("gamow");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp&) {
        io.out = app.help();
        return io;
    } catch (const CLI::ParseError& e) {
        io.err = std::string("error: ") + e.what() + "\n";
        io.exit_code = 1;
        return io;
    }

    try {
        if (eval_cmd->parsed()) {
            io.exit_code = run_eval(eval_pf, eval_method, eval_format, eval_rel_tol, io);
        } else if (cmp_cmd->parsed()) {
            io.exit_code = run_compare(cmp_pf, cmp_format, io);
        } else if (rt_cmd->parsed()) {
            if (mode_str == "bare") mode.mode = RateMode::bare;
            else if (mode_str == "cutoff") mode.mode = RateMode::cutoff;
            else if (mode_str == "depleted") mode.mode = RateMode::depleted;
            else if (mode_str == "screened") mode.mode = RateMode::screened;
            else throw DomainError("unknown --mode '" + mode_str + "'");
            json cfg;
            cfg["command"] = "rate-table";
            cfg["zi"] = sys.zi;
            cfg["zj"] = sys.zj;
            cfg["mi"] = sys.mi;
            cfg["mj"] = sys.mj;
            cfg["ni"] = sys.ni;
            cfg["nj"] = sys.nj;
            cfg["same_species"] = sys.same_species;
            cfg["s0"] = sys.s0;
            cfg["s1"] = sys.s1;
            cfg["s2"] = sys.s2;
            cfg["tmin"] = tmin;
            cfg["tmax"] = tmax;
            cfg["n"] = npts;
            cfg["mode"] = mode_str;
            io.exit_code = run_rate_table(sys, mode, tmin, tmax, npts, rt_format, cfg, io);
        } else if (st_cmd->parsed()) {
            const auto results = selftest::run_all();
            std::ostringstream os;
            for (const auto& r : results) os << selftest::format_line(r) << '\n';
            os << (selftest::all_passed(results) ? "selftest: all checks passed\n"
                                                 : "selftest: FAILURES present\n");
            io.out = os.str();
            io.exit_code = selftest::all_passed(results) ? 0 : 2;
        }
    } catch (const MissingFieldError& e) {
        io.err = std::string("invalid input: ") + e.what() + "\n";
        io.exit_code = 1;
    } catch (const DomainError& e) {
        io.err = std::string("invalid input: ") + e.what() + "\n";
        io.exit_code = 1;
    } catch (const Error& e) {
        io.err = std::string("evaluation failed: ") + e.what() + "\n";
        io.exit_code = 2;
    }
    return io;
}

} // namespace gamow::cli
