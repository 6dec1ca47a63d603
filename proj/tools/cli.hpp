#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rainbow::cli {

inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct Environment {
    std::optional<std::string> seed; // RAINBOW_SEED
};

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Environment &env = {});

} // namespace rainbow::cli
