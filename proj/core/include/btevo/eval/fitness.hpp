#pragma once

#include "btevo/sim/episode.hpp"

namespace btevo::eval {

/// 1 for a fly-through, otherwise 1 / (1 + 3|e|) with |e| in metres.
double fitness(sim::Outcome outcome, double e_norm) noexcept;
double fitness(const sim::EpisodeResult& result) noexcept;

}  // namespace btevo::eval
