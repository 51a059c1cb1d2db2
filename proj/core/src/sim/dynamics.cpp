#include "btevo/sim/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace btevo::sim {

void SimParams::validate() const {
  if (!(speed > 0)) throw std::invalid_argument("sim.speed must be positive");
  if (!(max_turn_rate > 0)) throw std::invalid_argument("sim.max_turn_rate must be positive");
  if (!(actuator_tau > 0)) throw std::invalid_argument("sim.actuator_tau must be positive");
  if (!(decision_rate > 0)) throw std::invalid_argument("sim.decision_rate must be positive");
  if (physics_substeps < 1) throw std::invalid_argument("sim.physics_substeps must be >= 1");
  if (!(timeout > 0)) throw std::invalid_argument("sim.timeout must be positive");
  if (!(spawn_margin >= 0)) throw std::invalid_argument("sim.spawn_margin must be >= 0");
}

double wrap_angle(double a) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::remainder(a, two_pi);  // [-pi, pi]
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

VehicleState step(const VehicleState& s, double rudder_command, double dt, const SimParams& p) {
  VehicleState n = s;
  n.rudder_command = rudder_command;
  n.rudder_actual = s.rudder_actual + (rudder_command - s.rudder_actual) * -std::expm1(-dt / p.actuator_tau);
  n.heading = wrap_angle(s.heading + n.rudder_actual * p.max_turn_rate * dt);
  n.x = s.x + p.speed * dt * std::cos(n.heading);
  n.y = s.y + p.speed * dt * std::sin(n.heading);
  n.time = s.time + dt;
  return n;
}

}  // namespace btevo::sim
