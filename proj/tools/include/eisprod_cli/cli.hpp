// Command line front end: argument parsing, job execution and JSON output.
#pragma once

#include "eisprod_cli/jobs.hpp"

#include <iosfwd>

namespace eisprod::cli {

struct Invocation {
    JobSpec job;
    int json_indent = -1;
    bool help_only = false;
};

// Parses argv into a job. Throws eisprod::Error (kind parse) on invalid usage.
Invocation parse_command_line(int argc, const char* const* argv, std::ostream& help_out);

// Exit status 0 with the result on `out`; 2 with {"schema", "error": {"kind", "message"}} on `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace eisprod::cli
