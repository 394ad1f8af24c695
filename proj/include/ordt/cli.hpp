#pragma once

#include <iosfwd>

namespace ordt {

// Exit codes: 0 success, 1 usage or domain error, 2 failed internal check.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitCheck = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordt
