#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace g4uip::cli {

// Exit codes.
inline constexpr int kOk = 0;        // success, provable, property holds
inline constexpr int kNegative = 1;  // unprovable, or a check found a failure
inline constexpr int kUsage = 2;     // bad flags or malformed input
inline constexpr int kLimit = 3;     // the search gave up without a verdict

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g4uip::cli
