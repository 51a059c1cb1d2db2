#include "btevo/eval/fitness.hpp"

namespace btevo::eval {

double fitness(sim::Outcome outcome, double e_norm) noexcept {
  if (outcome == sim::Outcome::Success) return 1.0;
  return 1.0 / (1.0 + 3.0 * e_norm);
}

double fitness(const sim::EpisodeResult& result) noexcept {
  return fitness(result.outcome, result.e_norm());
}

}  // namespace btevo::eval
