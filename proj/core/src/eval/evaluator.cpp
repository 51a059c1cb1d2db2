#include "btevo/eval/evaluator.hpp"

#include "btevo/common/parallel.hpp"
#include "btevo/eval/fitness.hpp"
#include "btevo/vision/pipeline.hpp"

namespace btevo::eval {

RunRecord summarize(const sim::EpisodeResult& r) {
  return {fitness(r), r.outcome, r.e_norm(), r.flight_time, r.approach_angle, r.centre_offset};
}

double mean_fitness(std::span<const RunRecord> runs) noexcept {
  if (runs.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : runs) sum += r.fitness;
  return sum / double(runs.size());
}

sim::EpisodeResult fly(const bt::BehaviourTree& tree, const sim::InitialCondition& init,
                       const EvaluationContext& context, sim::EpisodeOptions options) {
  vision::VisionPipeline vision(context.detector, context.camera);
  return sim::run_episode(tree, init, context.room, context.sim, vision, options);
}

std::vector<RunRecord> SimulationEvaluator::run(std::span<const EpisodeJob> jobs) const {
  std::vector<RunRecord> out(jobs.size());
  parallel_for(jobs.size(), context_.threads, [&](std::size_t i) {
    out[i] = summarize(fly(*jobs[i].tree, jobs[i].init, context_));
  });
  return out;
}

EvaluatedIndividual evaluate_individual(const bt::BehaviourTree& tree,
                                        std::span<const sim::InitialCondition> inits,
                                        const Evaluator& evaluator) {
  std::vector<EpisodeJob> jobs;
  jobs.reserve(inits.size());
  for (const auto& init : inits) jobs.push_back({&tree, init});
  EvaluatedIndividual ind{tree, 0.0, evaluator.run(jobs), tree.size()};
  ind.fitness = mean_fitness(ind.per_run);
  return ind;
}

}  // namespace btevo::eval
