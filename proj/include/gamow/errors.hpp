#ifndef GAMOW_ERRORS_HPP
#define GAMOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gamow {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A field required by the requested integral kind is absent.
class MissingFieldError : public Error {
public:
    explicit MissingFieldError(const std::string& msg) : Error(msg) {}
};

// A parameter violates its domain constraint (a<=0, rho<=0, z<0, g=0, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Gamma function evaluated at a nonpositive integer.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A hypergeometric denominator parameter is a nonpositive integer.
class DegenerateParamError : public Error {
public:
    explicit DegenerateParamError(const std::string& msg) : Error(msg) {}
};

// Series argument outside its radius of convergence.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

// nu is an integer or half-integer: the simple-pole residue series does not apply.
class DegenerateNuError : public Error {
public:
    explicit DegenerateNuError(const std::string& msg) : Error(msg) {}
};

// Iteration budget exhausted before reaching the requested tolerance.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
};

// Alternating reduction lost too many digits; caller should retry with quadrature.
class CancellationError : public Error {
public:
    explicit CancellationError(const std::string& msg) : Error(msg) {}
};

// Closed-form asymptotic requested outside its validity region.
class OutOfRegimeError : public Error {
public:
    explicit OutOfRegimeError(const std::string& msg) : Error(msg) {}
};

} // namespace gamow

#endif
