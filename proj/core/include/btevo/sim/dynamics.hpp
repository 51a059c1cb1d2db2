#pragma once

namespace btevo::sim {

/// Constants of the simplified flapping-wing model flown at trim: constant
/// speed and altitude, rudder-only directional control.
struct SimParams {
  double speed = 0.5;           // m/s
  double max_turn_rate = 0.4;   // rad/s at full rudder
  double actuator_tau = 1.0;    // s, first-order rudder lag
  double decision_rate = 10.0;  // Hz
  int physics_substeps = 10;    // per decision
  double timeout = 100.0;       // s
  double camera_height = 1.5;   // m
  double spawn_margin = 0.5;    // m

  void validate() const;

  double decision_period() const noexcept { return 1.0 / decision_rate; }
  double substep() const noexcept { return decision_period() / physics_substeps; }
  double min_turn_radius() const noexcept { return speed / max_turn_rate; }
};

struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  /// Radians, counter-clockwise from +x, wrapped to (-pi, pi].
  double heading = 0.0;
  double rudder_actual = 0.0;
  double rudder_command = 0.0;
  double time = 0.0;
};

/// (-pi, pi].
double wrap_angle(double a) noexcept;

/// Advances by dt: the rudder relaxes towards the command with the exact
/// first-order update a += (cmd - a) * (1 - exp(-dt / tau)), the heading
/// turns at rudder_actual * max_turn_rate, and the position moves speed * dt
/// along the new heading. Positive rudder turns counter-clockwise.
VehicleState step(const VehicleState& state, double rudder_command, double dt, const SimParams& params);

}  // namespace btevo::sim
