#ifndef LEVIFLAT_CLI_HPP
#define LEVIFLAT_CLI_HPP

#include <map>
#include <string>
#include <vector>

namespace lf::cli {

// Outcome of one command invocation.  `output` is the JSON report (already
// newline terminated) destined for standard output.
//
// Exit codes: 0 verified-true / success, 1 verified-false, 2 input error,
// 3 resource budget exceeded.
struct CliResult {
    int code = 0;
    std::string output;
};

CliResult run_command(const std::vector<std::string>& args);

// Models shipped with the binary, keyed ex1 / ex2 / ex3-circle.
const std::map<std::string, std::string>& builtin_fixtures();

} // namespace lf::cli

#endif
