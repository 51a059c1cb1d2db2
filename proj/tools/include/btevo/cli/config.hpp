#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "btevo/eval/evaluator.hpp"
#include "btevo/evo/params.hpp"

namespace btevo::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a run needs. Defaults reproduce the reference setup.
struct RunConfig {
  evo::EAParams ea;
  sim::RoomConfig room;
  sim::SimParams sim;
  vision::DetectorParams vision;
  std::filesystem::path output_dir = "btevo_out";

  eval::EvaluationContext context(unsigned threads) const;
  /// Throws ConfigError if any component invariant is violated.
  void validate() const;
};

/// INI-style file with [ea], [room], [sim], [vision] and [output] sections.
/// Everything defaults, so an empty file gives the standard setup. An [ea]
/// section, when present, must set every key; other sections may override
/// single keys. Unknown sections or keys are rejected. Throws ConfigError naming the offending key.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& text);

/// Complete config text for `config`, loadable by parse_config.
std::string format_config(const RunConfig& config);

}  // namespace btevo::cli
