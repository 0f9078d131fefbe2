#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spec_parse.hpp"

namespace blochcomp::run {

/// Command-line overrides; unset fields fall back to the document's budget and
/// the built-in defaults.
struct Options {
  std::optional<double> alpha;
  std::optional<double> c;
  std::optional<double> r;
  std::optional<double> r0;
  std::optional<int> k_max;
};

struct Artifact {
  std::string name;  // e.g. "omega.csv"
  std::string data;
};

struct Outcome {
  int exit_code = 0;  // 0 definite, 2 inconclusive (input errors throw)
  std::string text;
  std::vector<Artifact> artifacts;
};

/// Raised for inputs the commands refuse to process (e.g. a map that is not a
/// self-map of the disk); the surface maps this to exit code 1.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Commands: classify, tau-profile, omega, closed-range, seminorm, net-check.
/// Deterministic for fixed document and options; CSV artifacts use fixed
/// 17-significant-digit scientific formatting.
Outcome run_command(const spec::MapSpecDocument& doc, const std::string& command,
                    const Options& options);

}  // namespace blochcomp::run
