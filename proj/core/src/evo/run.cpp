#include "btevo/evo/run.hpp"

#include <cstdio>

#include "btevo/common/rng.hpp"
#include "btevo/evo/checkpoint.hpp"
#include "btevo/evo/operators.hpp"

namespace btevo::evo {

namespace {

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::size_t generation) {
  char name[32];
  std::snprintf(name, sizeof name, "gen_%04zu.jsonl", generation);
  return dir / "checkpoints" / name;
}

bool better(const eval::EvaluatedIndividual& a, const eval::EvaluatedIndividual& b) {
  if (a.fitness != b.fitness) return a.fitness > b.fitness;
  return a.size < b.size;
}

}  // namespace

EvolutionResult run_evolution(const EAParams& params, const eval::EvaluationContext& context,
                              const RunOptions& options) {
  params.validate();
  context.room.validate();
  context.sim.validate();
  const eval::SimulationEvaluator evaluator(context);

  std::optional<ArchiveWriter> archive;
  if (options.output_dir) {
    std::filesystem::create_directories(*options.output_dir / "checkpoints");
    archive.emplace(*options.output_dir / "archive.csv");
  }

  std::vector<bt::BehaviourTree> trees;
  trees.reserve(params.population_size);
  for (std::size_t slot = 0; slot < params.population_size; ++slot) {
    auto rng = make_rng(params.seed, {stream::kInitialPopulation, slot});
    trees.push_back(grow(params, rng));
  }
  InitSet inits = fresh_init_set(params, context);
  Population population = evaluate_population(std::move(trees), inits, evaluator, 0);

  EvolutionResult result;
  result.initial = summarize(0, population, inits);
  result.best = population[rank(population).front()];
  if (options.output_dir) write_checkpoint(checkpoint_path(*options.output_dir, 0), 0, population, inits);
  if (options.on_generation) options.on_generation(result.initial);

  for (std::size_t gen = 1; gen <= params.max_generations; ++gen) {
    auto next = next_generation(population, inits, params, context, evaluator, gen);
    population = std::move(next.population);
    inits = std::move(next.inits);

    const auto& gen_best = population[rank(population).front()];
    if (better(gen_best, result.best)) {
      result.best = gen_best;
      result.best_generation = gen;
    }
    if (archive) {
      archive->append(next.stats);
      write_checkpoint(checkpoint_path(*options.output_dir, gen), gen, population, inits);
    }
    if (options.on_generation) options.on_generation(next.stats);
    result.archive.push_back(std::move(next.stats));
  }
  result.final_population = std::move(population);
  result.final_inits = std::move(inits);
  return result;
}

}  // namespace btevo::evo
