#pragma once

#include <iosfwd>

namespace qvac::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;       // I/O and unexpected errors
inline constexpr int kExitArgumentError = 2; // bad flags or values outside a domain
inline constexpr int kExitNonConvergence = 3;

// Entry point of the `qvac` tool. Results go to `out` unless --output names a file;
// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qvac::cli
