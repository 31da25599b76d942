#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ginv::cli {

// Exit codes.
constexpr int kPass = 0;
constexpr int kClaimFails = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;

/// Runs one subcommand. args excludes the program name. Reports go to out
/// (or to --output), diagnostics and usage text to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ginv::cli
