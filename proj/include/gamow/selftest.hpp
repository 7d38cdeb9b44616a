#ifndef GAMOW_SELFTEST_HPP
#define GAMOW_SELFTEST_HPP

#include <string>
#include <vector>

namespace gamow::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0;  // worst metric observed (relative error etc.)
    std::string note;
    double seconds = 0;
};

// The acceptance checks, in order. Each runs at its pinned tolerance.
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

// One line per check: "[PASS] name (worst=..., t=...s)".
std::string format_line(const CheckResult& r);

} // namespace gamow::selftest

#endif
