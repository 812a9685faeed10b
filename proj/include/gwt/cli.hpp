#pragma once
// The gwtangent command line, callable in-process for tests.
//
// Exit codes: 0 success, 2 usage or malformed input, 3 hypothesis violation
// (not smooth, non-general, divisor collision), 4 internal inconsistency or
// a failed verification.

#include <iosfwd>
#include <string>
#include <vector>

namespace gwt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitInconsistency = 4;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwt
