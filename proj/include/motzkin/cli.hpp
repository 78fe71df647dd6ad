#pragma once

#include <iosfwd>

namespace motzkin::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kEmptyClass = 2;
inline constexpr int kMismatch = 3;
inline constexpr int kNotClosedForm = 4;

/// Runs one invocation of the command-line tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motzkin::cli
