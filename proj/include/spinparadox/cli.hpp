#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spinparadox/measurement.hpp"
#include "spinparadox/rotation.hpp"

namespace spinparadox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default seed for `simulate`.
inline constexpr const char* kSeedEnvVar = "SPINPARADOX_SEED";
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Thrown for malformed or out-of-range user input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "x", "y", "z" (case-insensitive) or "theta,phi" in radians, optionally
/// wrapped in parentheses.
Axis parse_axis(std::string_view text);
/// Comma-separated axes; general axes must be parenthesized, e.g.
/// "x,(0.5,1.0),z".
std::vector<Axis> parse_sequence(std::string_view text);

struct InitSpec {
  Axis axis;
  int twice_m;
};
/// "<axis>:<m>", e.g. "z:+2" or "(0.5,0):-1/2".
InitSpec parse_init(std::string_view text);
/// "<step>=<m>", e.g. "0=+2".
Condition parse_condition(std::string_view text);

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or the --output file) and diagnostics to `err`. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinparadox::cli
