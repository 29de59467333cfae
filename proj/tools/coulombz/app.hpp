#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coulombz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitVerification = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coulombz::cli
