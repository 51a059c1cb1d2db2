#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "btevo/eval/evaluator.hpp"
#include "btevo/evo/params.hpp"
#include "btevo/sim/episode.hpp"

namespace btevo::evo {

using Population = std::vector<eval::EvaluatedIndividual>;

/// Training initial conditions, kept across generations until every elite
/// flies through the window from them.
struct InitSet {
  std::vector<sim::InitialCondition> inits;
  /// Generations each init has been held over.
  std::vector<std::size_t> ages;
};

InitSet fresh_init_set(const EAParams& params, const eval::EvaluationContext& context);

struct GenerationStats {
  std::size_t generation = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  std::size_t best_size = 0;
  double mean_size = 0.0;
  std::vector<std::size_t> init_ages;
  std::size_t inits_replaced = 0;
};

/// Thrown when an episode evaluation fails inside a generation.
class EvolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Population indices ordered by fitness (desc), size (asc), index (asc).
std::vector<std::size_t> rank(const Population& population);

GenerationStats summarize(std::size_t generation, const Population& population, const InitSet& inits);

/// Evaluates freshly built trees on every init.
Population evaluate_population(std::vector<bt::BehaviourTree> trees, const InitSet& inits,
                               const eval::Evaluator& evaluator, std::size_t generation);

struct GenerationResult {
  Population population;
  InitSet inits;
  GenerationStats stats;
};

/// Builds generation `generation` from its evaluated predecessor: elites
/// copied, crossover pairs and mutated tournament copies for the rest, init
/// holdover update, evaluation. Randomness comes from streams derived from
/// (params.seed, generation, slot).
GenerationResult next_generation(const Population& population, const InitSet& inits,
                                 const EAParams& params, const eval::EvaluationContext& context,
                                 const eval::Evaluator& evaluator, std::size_t generation);

}  // namespace btevo::evo
