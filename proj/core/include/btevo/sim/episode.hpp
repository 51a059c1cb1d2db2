#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "btevo/bt/tree.hpp"
#include "btevo/common/rng.hpp"
#include "btevo/sim/dynamics.hpp"
#include "btevo/sim/room.hpp"
#include "btevo/vision/pipeline.hpp"

namespace btevo::sim {

struct InitialCondition {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

/// Uniform position over the room shrunk by spawn_margin, uniform heading.
InitialCondition spawn(Rng& rng, const RoomConfig& room, const SimParams& params);

enum class Outcome { Success, Crash, Timeout };
const char* to_string(Outcome o) noexcept;

enum class Termination { Continue, Success, Crash, Timeout };

struct TerminationEvent {
  Termination kind = Termination::Continue;
  /// Where the segment met a wall (Success or Crash).
  double x = 0.0;
  double y = 0.0;
};

/// Classifies the substep prev -> state. The earliest wall crossing along
/// the segment decides: through the window opening is Success, anything
/// else Crash. Otherwise Timeout once state.time reaches the limit.
TerminationEvent check_termination(const VehicleState& prev, const VehicleState& state,
                                   const RoomConfig& room, const SimParams& params);

struct PathSample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double rudder_actual = 0.0;
  bt::Blackboard blackboard;  // inputs as sensed, r as commanded
  /// Action node that set r this tick; empty if the command was held.
  std::optional<bt::NodeIndex> mode;
};

struct EpisodeResult {
  Outcome outcome = Outcome::Timeout;
  double final_x = 0.0;
  double final_y = 0.0;
  /// Plan-view vector from the window centre to the final position.
  double e_x = 0.0;
  double e_y = 0.0;
  double flight_time = 0.0;
  /// Degrees between heading at crossing and the window-wall normal
  /// (Success only, else 0).
  double approach_angle = 0.0;
  /// Lateral distance from the window centre at crossing (Success only).
  double centre_offset = 0.0;
  /// One sample per decision tick, taken before acting.
  std::vector<PathSample> path;

  double e_norm() const noexcept;
};

struct EpisodeOptions {
  bool record_path = false;
};

/// Sense -> tick -> act at the decision rate, integrating physics_substeps
/// substeps per decision and stopping at the first termination event.
EpisodeResult run_episode(const bt::BehaviourTree& tree, const InitialCondition& init,
                          const RoomConfig& room, const SimParams& params,
                          vision::VisionPipeline& vision, EpisodeOptions options = {});

}  // namespace btevo::sim
