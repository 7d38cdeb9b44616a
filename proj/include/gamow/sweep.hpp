#ifndef GAMOW_SWEEP_HPP
#define GAMOW_SWEEP_HPP

#include <vector>

#include "gamow/evaluate.hpp"

namespace gamow {

// One grid point of a batch evaluation.
struct SweepJob {
    IntegralKind kind = IntegralKind::I1;
    IntegralParams params;
};

// Serial reference implementation: results[i] = evaluate(jobs[i]).
std::vector<EvalResult> eval_grid_serial(const std::vector<SweepJob>& jobs,
                                         const EvalOptions& opts = {});

// OpenMP version. Every job is an independent pure evaluation and results are
// written by index, so the output is identical to the serial path regardless
// of scheduling. Falls back to the serial loop when built without OpenMP.
std::vector<EvalResult> eval_grid_parallel(const std::vector<SweepJob>& jobs,
                                           const EvalOptions& opts = {});

} // namespace gamow

#endif
