#ifndef GAMOW_EVALUATE_HPP
#define GAMOW_EVALUATE_HPP

#include <optional>

#include "gamow/asymptotics.hpp"
#include "gamow/reductions.hpp"

namespace gamow {

struct EvalOptions {
    std::optional<Method> force;  // empty = route via select_method
    ReductionControl reduction;
    Thresholds thresholds;
};

// Top-level entry: routes to the selected method and applies the documented
// fallbacks (CancellationError from the alternating reductions retries with
// the oracle; an out-of-regime asymptotic request under auto routing drops to
// quadrature). With force set, method errors propagate to the caller.
EvalResult evaluate(IntegralKind kind, const IntegralParams& params,
                    const EvalOptions& opts = {});

} // namespace gamow

#endif
