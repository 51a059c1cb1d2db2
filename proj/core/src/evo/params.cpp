#include "btevo/evo/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace btevo::evo {

namespace {
void require_fraction(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}
// Products such as 0.04 * 50 must not pick up a spurious extra unit from
// binary rounding.
constexpr double kSlack = 1e-9;
}  // namespace

void EAParams::validate() const {
  require_fraction(tournament_fraction, "tournament_fraction");
  require_fraction(elitism_rate, "elitism_rate");
  require_fraction(crossover_rate, "crossover_rate");
  require_fraction(mutation_rate, "mutation_rate");
  require_fraction(hcc_rate, "hcc_rate");
  if (population_size < 2) throw std::invalid_argument("population_size must be >= 2");
  if (max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (max_children < 1) throw std::invalid_argument("max_children must be >= 1");
  if (runs_per_individual < 1) throw std::invalid_argument("runs_per_individual must be >= 1");
  if (elite_count() >= population_size)
    throw std::invalid_argument("elitism_rate leaves no room for offspring");
}

std::size_t EAParams::elite_count() const noexcept {
  return static_cast<std::size_t>(std::ceil(elitism_rate * double(population_size) - kSlack));
}

std::size_t EAParams::tournament_size() const noexcept {
  const auto s = static_cast<std::size_t>(std::llround(tournament_fraction * double(population_size)));
  return std::min(population_size, std::max<std::size_t>(2, s));
}

std::size_t EAParams::crossover_children() const noexcept {
  const auto rest = population_size - std::min(population_size, elite_count());
  const auto c = static_cast<std::size_t>(std::llround(crossover_rate * double(rest)));
  return std::min(rest, c) / 2 * 2;
}

}  // namespace btevo::evo
