#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipramsey::cli {

// Exit codes. 0/1/2/4 are mathematical verdicts, 64+ are operational.
inline constexpr int kOk = 0;
inline constexpr int kUnsat = 1;
inline constexpr int kViolation = 2;
inline constexpr int kInconclusive = 4;
inline constexpr int kUsage = 64;
inline constexpr int kBadInput = 65;
inline constexpr int kGuard = 70;

// `args` excludes the program name. Data goes to `out`, diagnostics to `err`.
// An `--in` of "-" (the default) reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bipramsey::cli
