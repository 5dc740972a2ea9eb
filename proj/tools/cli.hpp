#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace til::cli {

/// Exit codes of `run`.
enum Exit : int { ok = 0, check_failed = 1, usage = 2, internal = 3 };

/// Parses a full command line (args[0] is the program name), runs the
/// selected command and writes JSON lines to `out`. Diagnostics and usage
/// text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace til::cli
