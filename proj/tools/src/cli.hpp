#pragma once

// The `bicycle` command line, as a library so tests can drive it in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bicycle::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // anything not covered below
  kParseError = 2,
  kCapRefused = 3,
  kInvariantViolated = 4,
};

/// Enumeration limits for the oracles, keyed as on the command line:
/// tutte, brown, iso, census, graph.
struct Caps {
  std::size_t tutte;
  std::size_t brown;
  std::size_t iso;
  std::size_t census;
  std::size_t graph;

  static Caps defaults();
};

/// Applies "N" (every cap) or "name=N,name=N" to `caps`.
/// Throws std::invalid_argument on unknown names or malformed numbers.
void apply_cap_spec(Caps& caps, const std::string& spec);

/// Runs one invocation. `args` excludes the program name. `env_cap` is the
/// value of BICYCLE_ORACLE_CAP, if set; --cap takes precedence over it.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const std::optional<std::string>& env_cap = std::nullopt);

}  // namespace bicycle::cli
