#ifndef GAMOW_PARAMS_HPP
#define GAMOW_PARAMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gamow/errors.hpp"

namespace gamow {

// The seven reaction probability integrals.
//
//   I1: int_0^inf y^nu e^{-a y} e^{-z y^-rho} dy
//   I2: same integrand, finite upper limit d
//   I3: extra depleted-tail factor e^{-b y^delta}
//   I4: barrier argument shifted, e^{-z (y+t)^-rho}
//   I5: Breit-Wigner denominator (c-y)^2 + g^2
//   I6: I5 with the depleted-tail factor
//   I7: denominator power arbitrary, [(c-y)^2 + g^2]^pow, optional depletion
enum class IntegralKind { I1, I2, I3, I4, I5, I6, I7 };

const char* to_string(IntegralKind kind);
std::optional<IntegralKind> kind_from_string(const std::string& name);

struct Depletion {
    double b = 0;      // tail suppression strength, > 0
    double delta = 0;  // tail suppression exponent, > 0
};

struct Resonance {
    double c = 0;    // resonance center, > 0
    double g = 0;    // resonance width, != 0
    double pow = 1;  // denominator exponent, > 0 (named pow; d is the cut-off)
};

// Parameter record shared by all seven integrals. Optional members switch the
// integrand extensions on; validate() checks which ones a kind requires.
struct IntegralParams {
    double nu = 0;    // power of y
    double a = 1;     // linear decay rate, > 0
    double z = 0;     // barrier strength, >= 0 (z=0 admitted as analytic anchor)
    double rho = 0.5; // barrier exponent, > 0

    std::optional<double> cutoff_d;     // finite upper limit (I2)
    std::optional<Depletion> depletion; // depleted tail (I3, I6, I7)
    std::optional<double> screening_t;  // barrier shift (I4)
    std::optional<Resonance> resonance; // Breit-Wigner denominator (I5, I6, I7)
};

enum class Method { quadrature, series, asymptotic };

const char* to_string(Method m);

// Value + diagnostics returned by every evaluator.
struct EvalResult {
    double value = 0;       // >= 0, integrands are nonnegative
    double abs_error = 0;   // estimated absolute error
    Method method = Method::quadrature;
    std::size_t terms_used = 0;
    bool converged = true;  // false implies warnings nonempty
    std::vector<std::string> warnings;

    void add_warning(std::string msg) { warnings.push_back(std::move(msg)); }
    void mark_failed(std::string msg) {
        converged = false;
        warnings.push_back(std::move(msg));
    }
};

// Returns params unchanged iff all invariants hold and the kind's required
// optional fields (and only those) are present.
// Throws MissingFieldError / DomainError otherwise.
IntegralParams validate(IntegralKind kind, const IntegralParams& params);

} // namespace gamow

#endif
