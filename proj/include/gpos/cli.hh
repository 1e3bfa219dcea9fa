#ifndef GPOS_CLI_HH
#define GPOS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace gpos
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_input_error = 1;
    inline constexpr int exit_timed_out = 2;

    /// Runs one command line (without the program name). Reports go to out
    /// unless redirected by a flag, diagnostics go to err, and "-" or a
    /// missing --input reads from in.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err, std::istream & in) -> int;
}

#endif
