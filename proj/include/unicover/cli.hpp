#pragma once

#include <ostream>
#include <string>

#include "unicover/errors.hpp"

namespace unicover::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kInputError = 2,
    kAlgorithmError = 3,
};

/// Exit code for an error kind; unknown kinds count as algorithmic.
int exit_code_for(const std::string& kind);

/// Runs `unicover <subcommand> ...` with argv[0] as the program name.
/// Everything meant for stdout goes to `out` (or the --out file), the
/// `error: <kind>: <detail>` line to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unicover::cli
