#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordweights::cli {

// Exit statuses of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kCheckFailed = 2;

// Runs one command line (args excludes the program name). Results go to `out`
// as JSON lines (or tables with --human), diagnostics to `err`. Diagram
// arguments may be omitted, in which case diagrams are read from `in`, one
// per line.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace chordweights::cli
