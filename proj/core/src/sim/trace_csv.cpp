#include "btevo/sim/trace_csv.hpp"

#include <cstdio>
#include <string>

namespace btevo::sim {

namespace {
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}
}  // namespace

void write_trace_csv(std::ostream& out, const EpisodeResult& result) {
  out << "t,x,y,heading,rudder_actual,bb_x,bb_sigma,bb_Sigma,bb_Delta,r_cmd,mode\n";
  for (const auto& s : result.path) {
    out << fmt(s.t) << ',' << fmt(s.x) << ',' << fmt(s.y) << ',' << fmt(s.heading) << ','
        << fmt(s.rudder_actual) << ',' << fmt(s.blackboard.x) << ',' << fmt(s.blackboard.sigma) << ','
        << fmt(s.blackboard.Sigma) << ',' << fmt(s.blackboard.Delta) << ',' << fmt(s.blackboard.r)
        << ',' << (s.mode ? std::to_string(*s.mode) : std::string("hold")) << '\n';
  }
  const double heading = result.path.empty() ? 0.0 : result.path.back().heading;
  const double rudder = result.path.empty() ? 0.0 : result.path.back().rudder_actual;
  const auto bb = result.path.empty() ? bt::Blackboard{} : result.path.back().blackboard;
  out << fmt(result.flight_time) << ',' << fmt(result.final_x) << ',' << fmt(result.final_y) << ','
      << fmt(heading) << ',' << fmt(rudder) << ',' << fmt(bb.x) << ',' << fmt(bb.sigma) << ','
      << fmt(bb.Sigma) << ',' << fmt(bb.Delta) << ',' << fmt(bb.r) << ',' << to_string(result.outcome)
      << '\n';
}

}  // namespace btevo::sim
