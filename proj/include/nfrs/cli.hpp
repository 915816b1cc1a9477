#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nfrs::cli {

enum class ExitCode : int
{
    Success = 0,
    ValidationErrors = 1,
    ParseFailure = 2,
    UsageError = 3
};

struct Environment
{
    /// ANSI styling of severities in text output.
    bool color = false;
};

/// Runs `nfrsctl` with `args` (excluding the program name).
ExitCode run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const Environment& env = {});

} // namespace nfrs::cli
