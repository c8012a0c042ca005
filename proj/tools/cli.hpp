#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alexandrov::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidation = 1;
inline constexpr int kNumeric = 2;
inline constexpr int kDistinct = 3;
inline constexpr int kUsage = 64;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// (or to the files named by --out/--obj/--svg), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexandrov::cli
