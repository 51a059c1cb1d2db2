#pragma once

#include <ostream>

#include "btevo/sim/episode.hpp"

namespace btevo::sim {

/// Header: t,x,y,heading,rudder_actual,bb_x,bb_sigma,bb_Sigma,bb_Delta,r_cmd,mode
/// One row per decision tick; `mode` is the index of the Action node that
/// set r, or "hold". A final row marks the terminal pose; its mode is the
/// outcome (success, crash or timeout).
void write_trace_csv(std::ostream& out, const EpisodeResult& result);

}  // namespace btevo::sim
