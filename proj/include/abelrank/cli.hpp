#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelrank {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_invalid_descriptor = 2,
    exit_usage = 3,
};

constexpr std::size_t kDefaultMaxOrder = 64;

/// Runs the command line `args` (without the program name). Documents go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelrank
