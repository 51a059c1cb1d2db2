#include "btevo/evo/population.hpp"

#include <algorithm>
#include <numeric>

#include "btevo/common/rng.hpp"
#include "btevo/evo/operators.hpp"

namespace btevo::evo {

InitSet fresh_init_set(const EAParams& params, const eval::EvaluationContext& context) {
  InitSet set;
  for (std::size_t j = 0; j < params.runs_per_individual; ++j) {
    auto rng = make_rng(params.seed, {stream::kInitSet, 0, j});
    set.inits.push_back(sim::spawn(rng, context.room, context.sim));
    set.ages.push_back(0);
  }
  return set;
}

std::vector<std::size_t> rank(const Population& population) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = population[a];
    const auto& y = population[b];
    if (x.fitness != y.fitness) return x.fitness > y.fitness;
    return x.size < y.size;
  });
  return order;
}

GenerationStats summarize(std::size_t generation, const Population& population, const InitSet& inits) {
  GenerationStats s;
  s.generation = generation;
  s.init_ages = inits.ages;
  if (population.empty()) return s;
  const auto& best = population[rank(population).front()];
  s.best_fitness = best.fitness;
  s.best_size = best.size;
  double f = 0.0, n = 0.0;
  for (const auto& ind : population) {
    f += ind.fitness;
    n += double(ind.size);
  }
  s.mean_fitness = f / double(population.size());
  s.mean_size = n / double(population.size());
  return s;
}

namespace {

std::vector<eval::RunRecord> run_jobs(const eval::Evaluator& evaluator,
                                      const std::vector<eval::EpisodeJob>& jobs, std::size_t generation) {
  try {
    return evaluator.run(jobs);
  } catch (const std::exception& e) {
    throw EvolutionError("episode evaluation failed in generation " + std::to_string(generation) + ": " +
                         e.what());
  }
}

}  // namespace

Population evaluate_population(std::vector<bt::BehaviourTree> trees, const InitSet& inits,
                               const eval::Evaluator& evaluator, std::size_t generation) {
  Population pop(trees.size());
  std::vector<eval::EpisodeJob> jobs;
  jobs.reserve(trees.size() * inits.inits.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    pop[i].tree = std::move(trees[i]);
    pop[i].size = pop[i].tree.size();
  }
  for (const auto& ind : pop)
    for (const auto& init : inits.inits) jobs.push_back({&ind.tree, init});
  const auto records = run_jobs(evaluator, jobs, generation);
  const auto k = inits.inits.size();
  for (std::size_t i = 0; i < pop.size(); ++i) {
    pop[i].per_run.assign(records.begin() + i * k, records.begin() + (i + 1) * k);
    pop[i].fitness = eval::mean_fitness(pop[i].per_run);
  }
  return pop;
}

GenerationResult next_generation(const Population& population, const InitSet& inits,
                                 const EAParams& params, const eval::EvaluationContext& context,
                                 const eval::Evaluator& evaluator, std::size_t generation) {
  const std::size_t M = params.population_size;
  const std::size_t n_elites = std::min(params.elite_count(), population.size());
  const std::size_t n_cross = params.crossover_children();
  const auto order = rank(population);

  std::vector<Candidate> candidates;
  candidates.reserve(population.size());
  for (const auto& ind : population) candidates.push_back({ind.fitness, ind.size});

  // Offspring trees for slots n_elites..M-1.
  std::vector<bt::BehaviourTree> offspring;
  offspring.reserve(M - n_elites);
  std::size_t slot = n_elites;
  for (; slot < n_elites + n_cross; slot += 2) {
    auto rng = make_rng(params.seed, {stream::kOffspring, generation, slot});
    const auto& pa = population[tournament_select(candidates, params, rng)].tree;
    const auto& pb = population[tournament_select(candidates, params, rng)].tree;
    auto children = crossover(pa, pb, params, rng);
    offspring.push_back(mutate(children.child_a, params, rng));
    offspring.push_back(mutate(children.child_b, params, rng));
  }
  for (; slot < M; ++slot) {
    auto rng = make_rng(params.seed, {stream::kOffspring, generation, slot});
    const auto& parent = population[tournament_select(candidates, params, rng)].tree;
    offspring.push_back(mutate(parent, params, rng));
  }

  // Holdover: an init is retired once every elite got through from it.
  GenerationResult out;
  out.inits = inits;
  std::vector<bool> replaced(inits.inits.size(), false);
  for (std::size_t j = 0; j < inits.inits.size(); ++j) {
    const bool all_elites_succeed =
        n_elites > 0 && std::all_of(order.begin(), order.begin() + n_elites, [&](std::size_t e) {
          return population[e].per_run.at(j).outcome == sim::Outcome::Success;
        });
    if (all_elites_succeed) {
      auto rng = make_rng(params.seed, {stream::kInitSet, generation, j});
      out.inits.inits[j] = sim::spawn(rng, context.room, context.sim);
      out.inits.ages[j] = 0;
      replaced[j] = true;
      ++out.stats.inits_replaced;
    } else {
      ++out.inits.ages[j];
    }
  }

  // Elites keep their cached results on retained inits (episodes are
  // deterministic) and only fly the replaced ones.
  const auto k = out.inits.inits.size();
  Population next(M);
  std::vector<eval::EpisodeJob> jobs;
  std::vector<std::pair<std::size_t, std::size_t>> job_target;  // (slot, init)
  for (std::size_t e = 0; e < n_elites; ++e) {
    next[e] = population[order[e]];
    for (std::size_t j = 0; j < k; ++j)
      if (replaced[j]) {
        jobs.push_back({&next[e].tree, out.inits.inits[j]});
        job_target.emplace_back(e, j);
      }
  }
  for (std::size_t s = n_elites; s < M; ++s) {
    next[s].tree = std::move(offspring[s - n_elites]);
    next[s].size = next[s].tree.size();
    next[s].per_run.assign(k, {});
    for (std::size_t j = 0; j < k; ++j) {
      jobs.push_back({&next[s].tree, out.inits.inits[j]});
      job_target.emplace_back(s, j);
    }
  }
  const auto records = run_jobs(evaluator, jobs, generation);
  for (std::size_t i = 0; i < records.size(); ++i)
    next[job_target[i].first].per_run[job_target[i].second] = records[i];
  for (auto& ind : next) ind.fitness = eval::mean_fitness(ind.per_run);

  const auto replaced_count = out.stats.inits_replaced;
  out.population = std::move(next);
  out.stats = summarize(generation, out.population, out.inits);
  out.stats.inits_replaced = replaced_count;
  return out;
}

}  // namespace btevo::evo
