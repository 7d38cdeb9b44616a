#include "gamow/params.hpp"

#include <cmath>

namespace gamow {

const char* to_string(IntegralKind kind) {
    switch (kind) {
        case IntegralKind::I1: return "I1";
        case IntegralKind::I2: return "I2";
        case IntegralKind::I3: return "I3";
        case IntegralKind::I4: return "I4";
        case IntegralKind::I5: return "I5";
        case IntegralKind::I6: return "I6";
        case IntegralKind::I7: return "I7";
    }
    return "?";
}

std::optional<IntegralKind> kind_from_string(const std::string& name) {
    static const std::pair<const char*, IntegralKind> table[] = {
        {"I1", IntegralKind::I1}, {"I2", IntegralKind::I2}, {"I3", IntegralKind::I3},
        {"I4", IntegralKind::I4}, {"I5", IntegralKind::I5}, {"I6", IntegralKind::I6},
        {"I7", IntegralKind::I7},
    };
    for (const auto& [s, k] : table)
        if (name == s) return k;
    return std::nullopt;
}

const char* to_string(Method m) {
    switch (m) {
        case Method::quadrature: return "quadrature";
        case Method::series: return "series";
        case Method::asymptotic: return "asymptotic";
    }
    return "?";
}

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

void require_present(bool present, const char* msg) {
    if (!present) throw MissingFieldError(msg);
}

void require_absent(bool present, const char* msg) {
    if (present) throw DomainError(msg);
}

} // namespace

IntegralParams validate(IntegralKind kind, const IntegralParams& p) {
    require(std::isfinite(p.nu), "nu must be finite");
    require(std::isfinite(p.a) && p.a > 0, "a must be positive (a > 0)");
    require(std::isfinite(p.z) && p.z >= 0, "z must be nonnegative (z >= 0)");
    require(std::isfinite(p.rho) && p.rho > 0, "rho must be positive (rho > 0)");

    if (p.cutoff_d) require(std::isfinite(*p.cutoff_d) && *p.cutoff_d > 0, "cutoff d must be positive");
    if (p.screening_t) require(std::isfinite(*p.screening_t) && *p.screening_t > 0, "screening t must be positive");
    if (p.depletion) {
        require(std::isfinite(p.depletion->b) && p.depletion->b > 0, "depletion b must be positive");
        require(std::isfinite(p.depletion->delta) && p.depletion->delta > 0, "depletion delta must be positive");
    }
    if (p.resonance) {
        require(std::isfinite(p.resonance->c) && p.resonance->c > 0, "resonance center c must be positive");
        require(std::isfinite(p.resonance->g) && p.resonance->g != 0, "resonance width g must be nonzero");
        require(std::isfinite(p.resonance->pow) && p.resonance->pow > 0, "resonance pow must be positive");
    }
    require(!(p.cutoff_d && p.screening_t), "at most one of cutoff d and screening t may be present");

    switch (kind) {
        case IntegralKind::I1:
            require_absent(p.cutoff_d.has_value(), "I1 takes no cutoff d");
            require_absent(p.screening_t.has_value(), "I1 takes no screening t");
            require_absent(p.depletion.has_value(), "I1 takes no depletion");
            require_absent(p.resonance.has_value(), "I1 takes no resonance");
            break;
        case IntegralKind::I2:
            require_present(p.cutoff_d.has_value(), "I2 requires the cutoff d");
            require_absent(p.screening_t.has_value(), "I2 takes no screening t");
            require_absent(p.depletion.has_value(), "I2 takes no depletion");
            require_absent(p.resonance.has_value(), "I2 takes no resonance");
            break;
        case IntegralKind::I3:
            require_present(p.depletion.has_value(), "I3 requires depletion (b, delta)");
            require_absent(p.cutoff_d.has_value(), "I3 takes no cutoff d");
            require_absent(p.screening_t.has_value(), "I3 takes no screening t");
            require_absent(p.resonance.has_value(), "I3 takes no resonance");
            break;
        case IntegralKind::I4:
            require_present(p.screening_t.has_value(), "I4 requires the screening shift t");
            require_absent(p.cutoff_d.has_value(), "I4 takes no cutoff d");
            require_absent(p.depletion.has_value(), "I4 takes no depletion");
            require_absent(p.resonance.has_value(), "I4 takes no resonance");
            break;
        case IntegralKind::I5:
            require_present(p.resonance.has_value(), "I5 requires resonance (c, g)");
            require(p.resonance->pow == 1.0, "I5 requires pow = 1 (use I7 for general pow)");
            require_absent(p.cutoff_d.has_value(), "I5 takes no cutoff d");
            require_absent(p.screening_t.has_value(), "I5 takes no screening t");
            require_absent(p.depletion.has_value(), "I5 takes no depletion");
            break;
        case IntegralKind::I6:
            require_present(p.resonance.has_value(), "I6 requires resonance (c, g)");
            require(p.resonance->pow == 1.0, "I6 requires pow = 1 (use I7 for general pow)");
            require_present(p.depletion.has_value(), "I6 requires depletion (b, delta)");
            require_absent(p.cutoff_d.has_value(), "I6 takes no cutoff d");
            require_absent(p.screening_t.has_value(), "I6 takes no screening t");
            break;
        case IntegralKind::I7:
            require_present(p.resonance.has_value(), "I7 requires resonance (c, g, pow)");
            require_absent(p.cutoff_d.has_value(), "I7 takes no cutoff d");
            require_absent(p.screening_t.has_value(), "I7 takes no screening t");
            break;
    }
    return p;
}

} // namespace gamow
