#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace digicover::cli {

/// Exit codes of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPredicateFailed = 1;
inline constexpr int kExitInputError = 2;

/// Documents with more points than this need --force for exhaustive checks.
inline constexpr std::size_t kDefaultSizeGuard = 64;

/// DIGICOVER_SIZE_GUARD when set to a positive integer, else the default.
std::size_t size_guard_from_env();

/// Runs `digicover <args...>` (args excludes the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digicover::cli
