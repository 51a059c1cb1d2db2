#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "btevo/eval/evaluator.hpp"

namespace btevo::eval {

struct ValidationRun {
  sim::InitialCondition init;
  RunRecord record;
};

struct ValidationReport {
  std::uint64_t init_seed = 0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double mean_flight_time = 0.0;
  /// Over successful runs only; empty when nothing got through.
  std::optional<double> mean_approach_angle;
  std::optional<double> mean_centre_offset;
  std::vector<ValidationRun> per_run;
};

/// The n spawn poses used by validate() for this seed.
std::vector<sim::InitialCondition> validation_spawns(std::size_t n_runs, std::uint64_t seed,
                                                     const EvaluationContext& context);

/// Flies the tree from n_runs seed-derived spawns and aggregates the
/// success rate and secondary metrics. Throws std::invalid_argument if
/// n_runs is zero.
ValidationReport validate(const bt::BehaviourTree& tree, std::size_t n_runs, std::uint64_t seed,
                          const EvaluationContext& context);

/// Header: init_x,init_y,init_heading,outcome,flight_time,e_norm,fitness,approach_angle,centre_offset
void write_validation_csv(std::ostream& out, const ValidationReport& report);

/// Human-readable summary block.
void write_validation_summary(std::ostream& out, const ValidationReport& report);

}  // namespace btevo::eval
