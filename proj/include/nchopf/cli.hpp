#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nchopf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitBoundExceeded = 2;
inline constexpr int kExitVerificationFailure = 3;

/// Runs one CLI invocation. `args` excludes the program name. Element JSON is read
/// from `in`, results go to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nchopf
