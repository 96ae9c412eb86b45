#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domchrom
{
    /// Process exit codes of the command-line tool.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_verification_failed = 1,   ///< verify found violations; invariants on an infeasible digraph
        exit_usage = 2,                 ///< unknown subcommand, bad flags, unreadable or malformed input
        exit_guard = 3                  ///< sweep edge limit or solver size limit exceeded
    };

    /// Dispatches one command line (without the program name).
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
