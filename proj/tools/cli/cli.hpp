#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sonet::cli {

/// Runs one command line (without the program name). Returns the process exit
/// code; output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sonet::cli
