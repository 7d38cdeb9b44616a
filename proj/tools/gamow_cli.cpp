#include <cstdio>
#include <string>
#include <vector>

#include "gamow/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto out = gamow::cli::run(args);
    if (!out.out.empty()) std::fputs(out.out.c_str(), stdout);
    if (!out.err.empty()) std::fputs(out.err.c_str(), stderr);
    return out.exit_code;
}
