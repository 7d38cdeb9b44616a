#include "gamow/rates.hpp"

#include <cmath>

namespace gamow {

namespace {
constexpr double PI = 3.14159265358979323846;
}

const Constants& constants() {
    static const Constants table;
    return table;
}

double reduced_mass(const ReactionSystem& sys) {
    if (!(sys.mi > 0) || !(sys.mj > 0)) throw DomainError("reduced_mass: masses must be positive");
    return sys.mi * sys.mj / (sys.mi + sys.mj) * constants().amu_gram;
}

double sommerfeld_z(const ReactionSystem& sys) {
    if (!(sys.temperature > 0)) throw DomainError("sommerfeld_z: temperature must be positive");
    if (sys.zi <= 0 || sys.zj <= 0) throw DomainError("sommerfeld_z: charge numbers must be positive");
    const Constants& c = constants();
    const double mu = reduced_mass(sys);
    const double kT = c.k_boltzmann * sys.temperature;
    return 2.0 * PI * std::sqrt(mu / (2.0 * kT)) * sys.zi * sys.zj * c.e_squared / c.planck_h;
}

RateResult nonresonant_rate(const ReactionSystem& sys, const RateModeSpec& mode,
                            const EvalOptions& opts) {
    const Constants& c = constants();
    if (!(sys.temperature > 0)) throw DomainError("nonresonant_rate: temperature must be positive");
    const double mu = reduced_mass(sys);
    const double kT = c.k_boltzmann * sys.temperature;

    RateResult out;
    out.z = sommerfeld_z(sys);

    IntegralParams base;
    base.a = 1.0;
    base.z = out.z;
    base.rho = 0.5;
    IntegralKind kind = IntegralKind::I1;
    switch (mode.mode) {
        case RateMode::bare:
            break;
        case RateMode::cutoff:
            kind = IntegralKind::I2;
            base.cutoff_d = mode.d;
            break;
        case RateMode::depleted:
            kind = IntegralKind::I3;
            base.depletion = Depletion{mode.b, mode.delta};
            break;
        case RateMode::screened: {
            if (!(mode.U_e >= 0)) throw DomainError("nonresonant_rate: U_e must be nonnegative");
            const double t = mode.U_e * c.keV_erg / kT;
            if (t == 0) break;  // U_e = 0 degenerates to the bare integral
            kind = IntegralKind::I4;
            base.screening_t = t;
            break;
        }
    }

    // S-factor Taylor coefficients in CGS: erg^(1-nu) cm^2
    const double S_cgs[3] = {sys.s0 * c.keV_erg * c.barn_cm2, sys.s1 * c.barn_cm2,
                             sys.s2 * c.barn_cm2 / c.keV_erg};

    double sum = 0;
    for (int nu = 0; nu < 3; ++nu) {
        IntegralParams p = base;
        p.nu = nu;
        const EvalResult r = evaluate(kind, p, opts);
        out.N[nu] = r.value;
        for (const auto& w : r.warnings) out.warnings.push_back(w);
        const double fact = nu == 2 ? 2.0 : 1.0;
        sum += S_cgs[nu] / fact * std::pow(kT, nu + 1) * r.value;
    }

    out.rate_unsym = sys.ni * sys.nj * std::sqrt(8.0 / (PI * mu)) * std::pow(kT, -1.5) * sum;
    out.rate = sys.same_species ? out.rate_unsym / 2.0 : out.rate_unsym;
    return out;
}

double resonant_probability(const ReactionSystem& sys, const ResonanceData& res,
                            const ReductionControl& ctl) {
    const Constants& c = constants();
    if (!(sys.temperature > 0)) throw DomainError("resonant_probability: temperature must be positive");
    const double kT = c.k_boltzmann * sys.temperature;
    const double mu = reduced_mass(sys);

    const double fac = 1.0 + 0.25 * res.Gamma1 * res.Gamma1;
    const double b_erg = res.E_r * c.keV_erg - 0.25 * res.Gamma0 * c.keV_erg * res.Gamma1;
    const double g_erg = 0.5 * (res.Gamma0 * c.keV_erg + res.E_r * c.keV_erg * res.Gamma1);
    if (g_erg == 0) throw DomainError("resonant_probability: derived width g is zero");
    if (!(b_erg > 0))
        throw DomainError("resonant_probability: derived resonance center is nonpositive");

    // non-dimensionalize energy by kT: a -> 1/fac, q -> z sqrt(fac), (b, g) -> /kT
    IntegralParams p;
    p.nu = 0;
    p.a = 1.0 / fac;
    p.z = sommerfeld_z(sys) * std::sqrt(fac);
    p.rho = 0.5;
    p.resonance = Resonance{b_erg / kT, g_erg / kT, 1.0};
    const double ivalue = i5_eval(p, ctl).value / kT;

    const auto& pc = res.prefactor_consts;
    const double pref = std::pow(2.0 * PI, 2.5) * sys.zi * sys.zj * c.e_squared *
                        pc.R0 * pc.w * pc.Gamma_kl * pc.D /
                        (std::sqrt(mu) * std::pow(kT, 1.5));
    return pref / fac * ivalue;
}

} // namespace gamow
