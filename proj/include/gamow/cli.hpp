#ifndef GAMOW_CLI_HPP
#define GAMOW_CLI_HPP

#include <string>
#include <vector>

namespace gamow::cli {

struct RunOutput {
    int exit_code = 0;  // 0 ok, 1 invalid input, 2 non-convergence/method failure
    std::string out;
    std::string err;
};

// Full command-line front end as a library call (the binary is a thin
// wrapper); args exclude the program name.
RunOutput run(const std::vector<std::string>& args);

} // namespace gamow::cli

#endif
