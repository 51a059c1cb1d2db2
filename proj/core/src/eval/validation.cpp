#include "btevo/eval/validation.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

#include "btevo/common/rng.hpp"

namespace btevo::eval {

std::vector<sim::InitialCondition> validation_spawns(std::size_t n_runs, std::uint64_t seed,
                                                     const EvaluationContext& context) {
  auto rng = make_rng(seed, {stream::kValidation});
  std::vector<sim::InitialCondition> inits;
  inits.reserve(n_runs);
  for (std::size_t i = 0; i < n_runs; ++i) inits.push_back(sim::spawn(rng, context.room, context.sim));
  return inits;
}

ValidationReport validate(const bt::BehaviourTree& tree, std::size_t n_runs, std::uint64_t seed,
                          const EvaluationContext& context) {
  if (n_runs == 0) throw std::invalid_argument("validation needs at least one run");
  const auto inits = validation_spawns(n_runs, seed, context);
  std::vector<EpisodeJob> jobs;
  jobs.reserve(n_runs);
  for (const auto& init : inits) jobs.push_back({&tree, init});
  const auto records = SimulationEvaluator(context).run(jobs);

  ValidationReport report;
  report.init_seed = seed;
  report.runs = n_runs;
  double time_sum = 0.0, angle_sum = 0.0, offset_sum = 0.0;
  for (std::size_t i = 0; i < n_runs; ++i) {
    const auto& r = records[i];
    report.per_run.push_back({inits[i], r});
    time_sum += r.flight_time;
    if (r.outcome == sim::Outcome::Success) {
      ++report.successes;
      angle_sum += r.approach_angle;
      offset_sum += r.centre_offset;
    }
  }
  report.success_rate = double(report.successes) / double(n_runs);
  report.mean_flight_time = time_sum / double(n_runs);
  if (report.successes > 0) {
    report.mean_approach_angle = angle_sum / double(report.successes);
    report.mean_centre_offset = offset_sum / double(report.successes);
  }
  return report;
}

namespace {
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}
}  // namespace

void write_validation_csv(std::ostream& out, const ValidationReport& report) {
  out << "init_x,init_y,init_heading,outcome,flight_time,e_norm,fitness,approach_angle,centre_offset\n";
  for (const auto& run : report.per_run) {
    const auto& r = run.record;
    out << fmt(run.init.x) << ',' << fmt(run.init.y) << ',' << fmt(run.init.heading) << ','
        << sim::to_string(r.outcome) << ',' << fmt(r.flight_time) << ',' << fmt(r.e_norm) << ','
        << fmt(r.fitness) << ',' << fmt(r.approach_angle) << ',' << fmt(r.centre_offset) << '\n';
  }
}

void write_validation_summary(std::ostream& out, const ValidationReport& report) {
  char line[160];
  std::snprintf(line, sizeof line, "runs               %zu (seed %llu)\n", report.runs,
                static_cast<unsigned long long>(report.init_seed));
  out << line;
  std::snprintf(line, sizeof line, "success rate       %.1f%% (%zu/%zu)\n", 100.0 * report.success_rate,
                report.successes, report.runs);
  out << line;
  std::snprintf(line, sizeof line, "mean flight time   %.1f s\n", report.mean_flight_time);
  out << line;
  if (report.mean_approach_angle) {
    std::snprintf(line, sizeof line, "mean approach      %.1f deg\n", *report.mean_approach_angle);
    out << line;
    std::snprintf(line, sizeof line, "mean centre offset %.3f m\n", *report.mean_centre_offset);
    out << line;
  } else {
    out << "mean approach      n/a (no successful runs)\nmean centre offset n/a\n";
  }
}

}  // namespace btevo::eval
