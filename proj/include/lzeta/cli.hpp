#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lzeta::cli {

// Exit codes of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDomain = 65;
inline constexpr int kConvergence = 69;

/// Runs one command. args excludes the program name. Everything printed goes
/// to `out` in one write at the end; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lzeta::cli
