#include "gamow/sweep.hpp"

#include <limits>

namespace gamow {

namespace {

// Exceptions must not unwind through an OpenMP region; both paths convert
// them to a failed result so serial and parallel outputs stay identical.
EvalResult eval_job(const SweepJob& job, const EvalOptions& opts) {
    try {
        return evaluate(job.kind, job.params, opts);
    } catch (const Error& e) {
        EvalResult r;
        r.value = std::numeric_limits<double>::quiet_NaN();
        r.abs_error = std::numeric_limits<double>::infinity();
        r.mark_failed(e.what());
        return r;
    }
}

} // namespace

std::vector<EvalResult> eval_grid_serial(const std::vector<SweepJob>& jobs,
                                         const EvalOptions& opts) {
    std::vector<EvalResult> out(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i)
        out[i] = eval_job(jobs[i], opts);
    return out;
}

std::vector<EvalResult> eval_grid_parallel(const std::vector<SweepJob>& jobs,
                                           const EvalOptions& opts) {
    std::vector<EvalResult> out(jobs.size());
    const long n = (long)jobs.size();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        out[(std::size_t)i] = eval_job(jobs[(std::size_t)i], opts);
    return out;
}

} // namespace gamow
