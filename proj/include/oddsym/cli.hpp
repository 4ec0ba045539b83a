#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddsym {

// Exit codes of run_cli.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Runs one command line (without the program name). Results go to out,
// one-line diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace oddsym
