#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "btevo/evo/population.hpp"

namespace btevo::evo {

struct RunOptions {
  /// When set, writes archive.csv and checkpoints/gen_NNNN.jsonl here.
  std::optional<std::filesystem::path> output_dir;
  /// Called after every generation, including the initial one.
  std::function<void(const GenerationStats&)> on_generation;
};

struct EvolutionResult {
  /// One record per call of next_generation (generations 1..G).
  std::vector<GenerationStats> archive;
  GenerationStats initial;
  Population final_population;
  InitSet final_inits;
  /// Best individual seen in any generation by fitness, then smaller size.
  eval::EvaluatedIndividual best;
  std::size_t best_generation = 0;
};

EvolutionResult run_evolution(const EAParams& params, const eval::EvaluationContext& context,
                              const RunOptions& options = {});

}  // namespace btevo::evo
