#pragma once

#include <iosfwd>

namespace thyme::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDataError = 2,
  kOverflow = 3,
};

// Entry point of the `thyme` tool. Results go to `out` unless --out names a
// file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thyme::cli
