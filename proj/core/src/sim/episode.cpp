#include "btevo/sim/episode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "btevo/bt/tick.hpp"

namespace btevo::sim {

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Success: return "success";
    case Outcome::Crash: return "crash";
    case Outcome::Timeout: return "timeout";
  }
  return "?";
}

InitialCondition spawn(Rng& rng, const RoomConfig& room, const SimParams& params) {
  const double m = params.spawn_margin;
  std::uniform_real_distribution<double> ux(m, room.width - m);
  std::uniform_real_distribution<double> uy(m, room.length - m);
  std::uniform_real_distribution<double> uh(-std::numbers::pi, std::numbers::pi);
  InitialCondition init;
  init.x = ux(rng);
  init.y = uy(rng);
  init.heading = uh(rng);
  if (init.heading <= -std::numbers::pi) init.heading = std::numbers::pi;
  return init;
}

double EpisodeResult::e_norm() const noexcept { return std::hypot(e_x, e_y); }

TerminationEvent check_termination(const VehicleState& prev, const VehicleState& state,
                                   const RoomConfig& room, const SimParams& params) {
  const double p0[2] = {prev.x, prev.y};
  const double p1[2] = {state.x, state.y};
  const double hi[2] = {room.width, room.length};

  double best_t = 2.0;
  int best_axis = -1;
  double best_plane = 0.0;
  auto consider = [&](int axis, double plane) {
    const double t = std::clamp((plane - p0[axis]) / (p1[axis] - p0[axis]), 0.0, 1.0);
    if (t < best_t) {
      best_t = t;
      best_axis = axis;
      best_plane = plane;
    }
  };
  for (int axis = 0; axis < 2; ++axis) {
    const double d = p1[axis] - p0[axis];
    if (p1[axis] <= 0.0 && d < 0.0) consider(axis, 0.0);
    else if (p1[axis] >= hi[axis] && d > 0.0) consider(axis, hi[axis]);
  }

  if (best_axis >= 0) {
    TerminationEvent ev;
    ev.x = p0[0] + best_t * (p1[0] - p0[0]);
    ev.y = p0[1] + best_t * (p1[1] - p0[1]);
    const double along = best_axis == 0 ? ev.y : ev.x;
    (best_axis == 0 ? ev.x : ev.y) = best_plane;
    const auto g = room.window_geometry();
    const bool window_wall = best_axis == g.axis && best_plane == g.plane;
    const bool in_opening = along > g.span_lo && along < g.span_hi &&
                            params.camera_height > g.z_lo && params.camera_height < g.z_hi;
    ev.kind = window_wall && in_opening ? Termination::Success : Termination::Crash;
    return ev;
  }
  if (state.time >= params.timeout - 1e-9) return {Termination::Timeout, state.x, state.y};
  return {};
}

EpisodeResult run_episode(const bt::BehaviourTree& tree, const InitialCondition& init,
                          const RoomConfig& room, const SimParams& params,
                          vision::VisionPipeline& vision, EpisodeOptions options) {
  const double dt = params.substep();
  const auto window = room.window_geometry();

  VehicleState state;
  state.x = init.x;
  state.y = init.y;
  state.heading = wrap_angle(init.heading);

  bt::Blackboard bb;
  EpisodeResult result;
  long substep_count = 0;

  for (;;) {
    const auto features = vision.sense({state.x, state.y, params.camera_height, state.heading}, room);
    features.write_to(bb);
    const auto ticked = bt::tick(tree, bb);
    bb = ticked.blackboard;
    const double command = std::clamp(bb.r, -1.0, 1.0);

    if (options.record_path)
      result.path.push_back({state.time, state.x, state.y, state.heading, state.rudder_actual, bb,
                             ticked.last_action});

    for (int s = 0; s < params.physics_substeps; ++s) {
      const VehicleState prev = state;
      state = step(state, command, dt, params);
      state.time = double(++substep_count) * dt;
      const auto ev = check_termination(prev, state, room, params);
      if (ev.kind == Termination::Continue) continue;

      result.final_x = ev.x;
      result.final_y = ev.y;
      result.e_x = ev.x - window.cx;
      result.e_y = ev.y - window.cy;
      if (ev.kind == Termination::Timeout) {
        result.outcome = Outcome::Timeout;
        result.flight_time = state.time;
      } else {
        const double seg = std::hypot(state.x - prev.x, state.y - prev.y);
        const double frac = seg > 0 ? std::hypot(ev.x - prev.x, ev.y - prev.y) / seg : 1.0;
        result.flight_time = prev.time + frac * dt;
        if (ev.kind == Termination::Success) {
          result.outcome = Outcome::Success;
          const double normal_component =
              window.axis == 1 ? std::sin(state.heading) : std::cos(state.heading);
          result.approach_angle =
              std::acos(std::clamp(std::abs(normal_component), 0.0, 1.0)) * 180.0 / std::numbers::pi;
          result.centre_offset = std::abs(window.along(ev.x, ev.y) - window.along_centre());
        } else {
          result.outcome = Outcome::Crash;
        }
      }
      return result;
    }
  }
}

}  // namespace btevo::sim
