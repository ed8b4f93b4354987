#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "seedlearn/caps.hpp"

namespace seedlearn {

enum ExitStatus : int {
  kExitOk = 0,
  kExitLearnerFail = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// One experiment: a command name, its parameters (flag names with dashes
/// replaced by underscores), and the global settings.
struct RunConfig {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t rng_seed = 0;
  std::string format = "text";  // text | json
  Caps caps;
  bool no_time = false;
};

struct Report {
  nlohmann::json json;  // command, inputs, outputs, checks, ok, status
  int exit_status = kExitOk;

  /// Rendered per the config's format, newline-terminated.
  std::string render(const std::string& format) const;
};

/// Parses "max_n=12,max_class=5000". Unknown keys or non-positive values
/// throw std::invalid_argument.
Caps parse_caps(const std::string& text, Caps base = {});

/// Dispatches to the named command. Never throws for bad input: usage errors
/// and cap violations become exit statuses with an "error" field.
Report run_experiment(const RunConfig& config);

}  // namespace seedlearn
