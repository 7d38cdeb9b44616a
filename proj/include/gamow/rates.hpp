#ifndef GAMOW_RATES_HPP
#define GAMOW_RATES_HPP

#include <string>
#include <vector>

#include "gamow/evaluate.hpp"

namespace gamow {

// CGS-Gaussian constants (e^2 carries the erg*cm of the Gaussian Coulomb law).
struct Constants {
    double k_boltzmann = 1.380649e-16;        // erg/K
    double planck_h = 6.62607015e-27;         // erg s
    double e_squared = 2.3070775513368427e-19; // (4.80320471257e-10 statC)^2, erg cm
    double amu_gram = 1.66053906660e-24;      // g
    double keV_erg = 1.602176634e-9;          // erg per keV
    double barn_cm2 = 1e-24;                  // cm^2 per barn
    std::string version = "CODATA-2018";
};

// Read-only table; every output that depends on it echoes version.
const Constants& constants();

struct ReactionSystem {
    int zi = 1, zj = 1;        // charge numbers
    double mi = 1, mj = 1;     // masses, amu
    double temperature = 1e7;  // K
    double s0 = 0;             // S(0), keV barn
    double s1 = 0;             // S'(0), barn
    double s2 = 0;             // S''(0), barn/keV
    double ni = 1, nj = 1;     // number densities, cm^-3
    bool same_species = false;
};

struct PrefactorConsts {
    // opaque multiplicative constants of the Breit-Wigner prefactor
    double R0 = 1, w = 1, Gamma_kl = 1, D = 1;
};

struct ResonanceData {
    double E_r = 1;       // resonance energy, keV
    double Gamma0 = 0.1;  // width parameter, keV
    double Gamma1 = 0;    // width slope, dimensionless
    PrefactorConsts prefactor_consts;
};

enum class RateMode { bare, cutoff, depleted, screened };

struct RateModeSpec {
    RateMode mode = RateMode::bare;
    double d = 0;            // cutoff, in units of kT
    double b = 0, delta = 0; // depletion, dimensionless
    double U_e = 0;          // screening energy, keV
};

struct RateResult {
    double rate = 0;        // cm^-3 s^-1, identical-particle factor applied
    double rate_unsym = 0;  // without the 1/(1+delta_ij) factor
    double z = 0;           // Sommerfeld z at this temperature
    double N[3] = {0, 0, 0};
    std::vector<std::string> warnings;
};

// mu = mi mj / (mi + mj), in grams.
double reduced_mass(const ReactionSystem& sys);

// z = 2 pi sqrt(mu / (2 k T)) z_i z_j e^2 / h, dimensionless.
double sommerfeld_z(const ReactionSystem& sys);

// r_ij = n_i n_j/(1+delta_ij) (8/(pi mu))^(1/2) (kT)^(-3/2)
//        sum_nu S^(nu)(0)/nu! (kT)^(nu+1) N_nu(z)
// where N_nu routes to I1/I2/I3/I4 according to the mode.
RateResult nonresonant_rate(const ReactionSystem& sys, const RateModeSpec& mode,
                            const EvalOptions& opts = {});

// Broad-resonance <sigma v>: the Breit-Wigner prefactor times the resonant
// integral, non-dimensionalized by kT and evaluated through i5_eval (window-
// gated series with quadrature fallback). Units cm^3 s^-1 times the opaque
// prefactor constants.
double resonant_probability(const ReactionSystem& sys, const ResonanceData& res,
                            const ReductionControl& ctl = {});

} // namespace gamow

#endif
