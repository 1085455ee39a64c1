#pragma once

#include <iosfwd>

namespace subsec {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitViolation = 2;

/// Entry point of the `subsec` command. Input "-" reads from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace subsec
