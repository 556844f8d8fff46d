#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cga::cli {

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_bad_rational = 3;
inline constexpr int exit_zero_theta = 4;
inline constexpr int exit_failure = 5;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cga::cli
