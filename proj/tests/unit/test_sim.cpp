#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "btevo/bt/tree.hpp"
#include "btevo/common/rng.hpp"
#include "btevo/sim/dynamics.hpp"
#include "btevo/sim/episode.hpp"
#include "btevo/sim/room.hpp"
#include "btevo/sim/trace_csv.hpp"
#include "btevo/vision/pipeline.hpp"

using namespace btevo::sim;
namespace bt = btevo::bt;

namespace {

const double kPi = std::numbers::pi;

VehicleState at(double x, double y, double heading, double time = 0.0) {
  VehicleState s;
  s.x = x;
  s.y = y;
  s.heading = heading;
  s.time = time;
  return s;
}

EpisodeResult fly_constant(double r, InitialCondition init, bool record = true) {
  btevo::vision::VisionPipeline vision;
  return run_episode(bt::BehaviourTree::from_spec(bt::act(r)), init, RoomConfig{}, SimParams{}, vision,
                     {.record_path = record});
}

// Time at which the filtered rudder first reaches `level` for a unit step.
double crossing_time(double level, double dt) {
  const SimParams p;
  VehicleState s = at(4, 4, 0);
  double t = 0.0;
  while (s.rudder_actual < level) {
    const double before = s.rudder_actual;
    s = step(s, 1.0, dt, p);
    t += dt;
    if (s.rudder_actual >= level) return t - dt * (s.rudder_actual - level) / (s.rudder_actual - before);
  }
  return t;
}

}  // namespace

TEST(Dynamics, FilterMatchesExactExponential) {
  const SimParams p;
  VehicleState s = at(4, 4, 0);
  for (int i = 1; i <= 500; ++i) {
    s = step(s, 1.0, 0.01, p);
    ASSERT_NEAR(s.rudder_actual, 1.0 - std::exp(-0.01 * i / p.actuator_tau), 1e-12);
  }
}

TEST(Dynamics, StepResponseRiseAndSettlingTimes) {
  const double t10 = crossing_time(0.1, 0.01);
  const double t90 = crossing_time(0.9, 0.01);
  const double t98 = crossing_time(0.98, 0.01);
  EXPECT_NEAR(t90 - t10, 2.20, 0.05);
  EXPECT_NEAR(t98, 3.91, 0.05);
  EXPECT_NEAR(t90 - t10, std::log(9.0), 1e-3);
  EXPECT_NEAR(t98, std::log(50.0), 1e-3);
}

TEST(Dynamics, FullRudderCircleRadius) {
  const SimParams p;
  EXPECT_DOUBLE_EQ(p.min_turn_radius(), 1.25);
  VehicleState s = at(4, 4, 0);
  s.rudder_actual = 1.0;
  std::vector<std::pair<double, double>> pts;
  const int per_lap = static_cast<int>(std::round(2 * kPi / (p.max_turn_rate * 0.01)));
  for (int i = 0; i < per_lap; ++i) {
    s = step(s, 1.0, 0.01, p);
    pts.emplace_back(s.x, s.y);
  }
  double cx = 0, cy = 0;
  for (auto [x, y] : pts) cx += x, cy += y;
  cx /= pts.size();
  cy /= pts.size();
  for (auto [x, y] : pts) ASSERT_NEAR(std::hypot(x - cx, y - cy), 1.25, 0.0125);
  // Positive rudder turns counter-clockwise: heading 0 circles about a centre to the north.
  EXPECT_NEAR(cx, 4.0, 0.01);
  EXPECT_NEAR(cy, 5.25, 0.01);
}

TEST(Dynamics, ZeroRudderFliesStraight) {
  const SimParams p;
  VehicleState s = at(1, 2, 0.3);
  for (int i = 0; i < 100; ++i) s = step(s, 0.0, 0.01, p);
  EXPECT_EQ(s.heading, 0.3);
  EXPECT_NEAR(s.x, 1 + 0.5 * std::cos(0.3), 1e-12);
  EXPECT_NEAR(s.y, 2 + 0.5 * std::sin(0.3), 1e-12);
}

TEST(Dynamics, SpeedAndTurnRateBounds) {
  const SimParams p;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> cmd(-1.0, 1.0);
  VehicleState s = at(4, 4, 2.0);
  for (int i = 0; i < 5000; ++i) {
    const auto next = step(s, cmd(rng), 0.01, p);
    ASSERT_NEAR(std::hypot(next.x - s.x, next.y - s.y), p.speed * 0.01, 1e-12);
    ASSERT_LE(std::abs(wrap_angle(next.heading - s.heading)), p.max_turn_rate * 0.01 + 1e-15);
    ASSERT_LE(std::abs(next.rudder_actual), 1.0);
    ASSERT_GT(next.heading, -kPi);
    ASSERT_LE(next.heading, kPi);
    s = next;
  }
}

TEST(Dynamics, WrapAngle) {
  EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
  EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-12);
  EXPECT_NEAR(wrap_angle(-5 * kPi / 2), -kPi / 2, 1e-12);
  EXPECT_DOUBLE_EQ(wrap_angle(0.5), 0.5);
}

TEST(Spawn, RespectsMarginAndIsUniform) {
  const RoomConfig room;
  const SimParams p;
  auto rng = btevo::make_rng(42, {7});
  std::vector<int> cells(16, 0), headings(8, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto s = spawn(rng, room, p);
    ASSERT_GE(s.x, 0.5);
    ASSERT_LE(s.x, 7.5);
    ASSERT_GE(s.y, 0.5);
    ASSERT_LE(s.y, 7.5);
    ASSERT_GT(s.heading, -kPi);
    ASSERT_LE(s.heading, kPi);
    ++cells[std::min(3, int((s.x - 0.5) / 7.0 * 4)) * 4 + std::min(3, int((s.y - 0.5) / 7.0 * 4))];
    ++headings[std::min(7, int((s.heading + kPi) / (2 * kPi) * 8))];
  }
  auto p_value = [](const std::vector<int>& counts, int total) {
    const double expected = double(total) / counts.size();
    double chi2 = 0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    return boost::math::cdf(boost::math::complement(
        boost::math::chi_squared(double(counts.size() - 1)), chi2));
  };
  EXPECT_GT(p_value(cells, n), 0.01);
  EXPECT_GT(p_value(headings, n), 0.01);
}

TEST(Spawn, DeterministicForSeed) {
  auto a = btevo::make_rng(9, {1, 2});
  auto b = btevo::make_rng(9, {1, 2});
  for (int i = 0; i < 100; ++i) ASSERT_EQ(spawn(a, {}, {}), spawn(b, {}, {}));
}

TEST(Termination, ThroughWindowCentre) {
  const auto ev = check_termination(at(4.0, 7.999, kPi / 2), at(4.0, 8.004, kPi / 2, 10), {}, {});
  EXPECT_EQ(ev.kind, Termination::Success);
  EXPECT_DOUBLE_EQ(ev.y, 8.0);
  EXPECT_NEAR(ev.x, 4.0, 1e-12);
}

TEST(Termination, WindowEdgeStrikeIsCrash) {
  EXPECT_EQ(check_termination(at(3.5, 7.999, kPi / 2), at(3.5, 8.004, kPi / 2, 10), {}, {}).kind,
            Termination::Crash);
  EXPECT_EQ(check_termination(at(4.4, 7.999, kPi / 2), at(4.4, 8.004, kPi / 2, 10), {}, {}).kind,
            Termination::Crash);
  EXPECT_EQ(check_termination(at(4.39, 7.999, kPi / 2), at(4.39, 8.004, kPi / 2, 10), {}, {}).kind,
            Termination::Success);
}

TEST(Termination, OtherWallsCrash) {
  EXPECT_EQ(check_termination(at(7.998, 4, 0), at(8.003, 4, 0), {}, {}).kind, Termination::Crash);
  EXPECT_EQ(check_termination(at(0.002, 4, kPi), at(-0.003, 4, kPi), {}, {}).kind, Termination::Crash);
  EXPECT_EQ(check_termination(at(4, 0.002, -kPi / 2), at(4, -0.003, -kPi / 2), {}, {}).kind,
            Termination::Crash);
  // Window-shaped position on the south wall is still solid.
  EXPECT_EQ(check_termination(at(4, 0.002, -kPi / 2), at(4, -0.003, -kPi / 2), {}, {}).kind,
            Termination::Crash);
}

TEST(Termination, EarliestWallWinsAtCorner) {
  // Crosses x = 8 at y = 7.9995 before y = 8.
  const auto ev = check_termination(at(7.999, 7.999, kPi / 4), at(8.004, 8.002, kPi / 4), {}, {});
  EXPECT_EQ(ev.kind, Termination::Crash);
  EXPECT_DOUBLE_EQ(ev.x, 8.0);
}

TEST(Termination, TimeoutAndPrecedence) {
  EXPECT_EQ(check_termination(at(4, 4, 0, 99.99), at(4.005, 4, 0, 100.0), {}, {}).kind, Termination::Timeout);
  EXPECT_EQ(check_termination(at(4, 4, 0, 99.98), at(4.005, 4, 0, 99.99), {}, {}).kind, Termination::Continue);
  EXPECT_EQ(check_termination(at(4, 7.999, kPi / 2, 99.99), at(4, 8.004, kPi / 2, 100.0), {}, {}).kind,
            Termination::Success);
  EXPECT_EQ(check_termination(at(7.999, 4, 0, 99.99), at(8.004, 4, 0, 100.0), {}, {}).kind, Termination::Crash);
}

TEST(Termination, WindowOnOtherWallAndOffset) {
  RoomConfig room;
  room.window.wall = Wall::East;
  room.window.centre_offset = 1.5;  // centre at y = 5.5
  EXPECT_EQ(check_termination(at(7.999, 5.5, 0), at(8.004, 5.5, 0), room, {}).kind, Termination::Success);
  EXPECT_EQ(check_termination(at(7.999, 4.0, 0), at(8.004, 4.0, 0), room, {}).kind, Termination::Crash);
  EXPECT_EQ(check_termination(at(4.0, 7.999, kPi / 2), at(4.0, 8.004, kPi / 2), room, {}).kind,
            Termination::Crash);
}

TEST(Episode, StraightThroughCentredWindow) {
  const auto r = fly_constant(0.0, {4.0, 4.0, kPi / 2});
  EXPECT_EQ(r.outcome, Outcome::Success);
  EXPECT_NEAR(r.flight_time, 8.0, 1e-9);
  EXPECT_NEAR(r.approach_angle, 0.0, 1e-6);
  EXPECT_NEAR(r.centre_offset, 0.0, 1e-9);
  // The crossing falls on the 80th decision boundary, give or take rounding.
  EXPECT_GE(r.path.size(), 80u);
  EXPECT_LE(r.path.size(), 81u);
}

TEST(Episode, FullRudderCirclesUntilTimeout) {
  const auto r = fly_constant(1.0, {4.0, 4.0, 0.0});
  EXPECT_EQ(r.outcome, Outcome::Timeout);
  EXPECT_NEAR(r.flight_time, 100.0, 1e-9);
  ASSERT_EQ(r.path.size(), 1000u);
  // Once the rudder has settled the path is a closed circle of the minimum radius.
  const double t0 = 20.0, t1 = t0 + 5 * 2 * kPi / 0.4;  // five whole laps
  double cx = 0, cy = 0;
  std::size_t n = 0;
  for (const auto& s : r.path)
    if (s.t >= t0 && s.t < t1) cx += s.x, cy += s.y, ++n;
  cx /= n;
  cy /= n;
  for (const auto& s : r.path) {
    ASSERT_GT(s.x, 0.0);
    ASSERT_LT(s.x, 8.0);
    ASSERT_GT(s.y, 0.0);
    ASSERT_LT(s.y, 8.0);
    if (s.t >= t0) ASSERT_NEAR(std::hypot(s.x - cx, s.y - cy), 1.25, 0.0125);
  }
}

TEST(Episode, CrashIntoBlankWallFromThreeMetres) {
  const auto r = fly_constant(0.0, {5.0, 4.0, 0.0});
  EXPECT_EQ(r.outcome, Outcome::Crash);
  EXPECT_NEAR(r.flight_time, 6.0, 0.2);
  EXPECT_NEAR(r.flight_time, 6.0, 1e-9);
  EXPECT_DOUBLE_EQ(r.final_x, 8.0);
  EXPECT_NEAR(r.e_norm(), std::hypot(4.0, 4.0), 1e-9);
}

TEST(Episode, DeterministicIncludingPath) {
  const auto tree = bt::BehaviourTree::from_spec(
      bt::sel({bt::seq({bt::cond(bt::Variable::DisparitySum, bt::Comparison::GreaterThan, 0.08), bt::act(-1.0)}),
               bt::seq({bt::cond(bt::Variable::WindowX, bt::Comparison::LessThan, 0.0), bt::act(0.5)}),
               bt::act(-0.3)}));
  btevo::vision::VisionPipeline v1, v2;
  const auto a = run_episode(tree, {2.0, 3.0, 1.0}, {}, {}, v1, {.record_path = true});
  const auto b = run_episode(tree, {2.0, 3.0, 1.0}, {}, {}, v2, {.record_path = true});
  ASSERT_EQ(a.path.size(), b.path.size());
  for (std::size_t i = 0; i < a.path.size(); ++i) {
    ASSERT_EQ(a.path[i].x, b.path[i].x);
    ASSERT_EQ(a.path[i].y, b.path[i].y);
    ASSERT_EQ(a.path[i].blackboard, b.path[i].blackboard);
    ASSERT_EQ(a.path[i].mode, b.path[i].mode);
  }
  EXPECT_EQ(a.flight_time, b.flight_time);
  EXPECT_EQ(a.outcome, b.outcome);
}

TEST(Episode, FirstSampleIsSensedBeforeMoving) {
  const auto r = fly_constant(0.3, {2.0, 2.0, 0.5});
  ASSERT_FALSE(r.path.empty());
  EXPECT_EQ(r.path[0].t, 0.0);
  EXPECT_EQ(r.path[0].x, 2.0);
  EXPECT_EQ(r.path[0].rudder_actual, 0.0);
  EXPECT_EQ(r.path[0].blackboard.r, 0.3);
  EXPECT_EQ(r.path[0].mode, bt::NodeIndex{0});
}

TEST(TraceCsv, HeaderRowsAndOutcome) {
  const auto r = fly_constant(0.0, {4.0, 4.0, kPi / 2});
  std::ostringstream out;
  write_trace_csv(out, r);
  std::istringstream in(out.str());
  std::string line, last;
  std::getline(in, line);
  EXPECT_EQ(line, "t,x,y,heading,rudder_actual,bb_x,bb_sigma,bb_Sigma,bb_Delta,r_cmd,mode");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 10);
  }
  EXPECT_EQ(rows, r.path.size() + 1);
  EXPECT_TRUE(last.ends_with(",success")) << last;
  EXPECT_TRUE(last.starts_with("8.0")) << last;
}
