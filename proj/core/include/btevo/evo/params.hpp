#pragma once

#include <cstddef>
#include <cstdint>

namespace btevo::evo {

/// Evolution settings. Defaults are the reference experiment.
struct EAParams {
  std::size_t max_generations = 150;
  std::size_t population_size = 100;
  double tournament_fraction = 0.06;
  double elitism_rate = 0.04;
  double crossover_rate = 0.80;
  double mutation_rate = 0.20;
  double hcc_rate = 0.20;
  std::size_t max_depth = 6;
  std::size_t max_children = 6;
  std::size_t runs_per_individual = 6;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  /// ceil(elitism_rate * M).
  std::size_t elite_count() const noexcept;
  /// max(2, round(tournament_fraction * M)), at most M.
  std::size_t tournament_size() const noexcept;
  /// round(crossover_rate * (M - elites)) rounded down to an even number.
  std::size_t crossover_children() const noexcept;
};

}  // namespace btevo::evo
