#include "btevo/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "btevo/bt/dsl.hpp"
#include "btevo/bt/prune.hpp"
#include "btevo/bt/tick.hpp"
#include "btevo/cli/config.hpp"
#include "btevo/eval/validation.hpp"
#include "btevo/evo/run.hpp"
#include "btevo/sim/trace_csv.hpp"
#include "btevo/vision/pgm.hpp"

namespace btevo::cli {

namespace {

/// Reports a usage problem; commands return its code directly.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunConfig config_or_default(const std::optional<std::filesystem::path>& path) {
  return path ? load_config(*path) : RunConfig{};
}

bt::BehaviourTree load_tree(const std::filesystem::path& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read tree file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto parsed = bt::parse(buf.str());
    for (const auto& w : parsed.warnings) err << path.string() << ": warning: " << w << '\n';
    return std::move(parsed.tree);
  } catch (const bt::ParseError& e) {
    throw UsageError(path.string() + ":" + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

/// Runs a command body, mapping exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string describe(const bt::NodeKind& kind) {
  if (std::holds_alternative<bt::Selector>(kind)) return "sel";
  if (std::holds_alternative<bt::Sequence>(kind)) return "seq";
  bt::TreeSpec leaf{kind, {}};
  auto text = bt::serialize_compact(bt::BehaviourTree::from_spec(leaf));
  return text.substr(1, text.size() - 2);
}

}  // namespace

int cmd_evolve(const EvolveOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!options.config) throw UsageError("evolve needs --config");
    auto config = load_config(*options.config);
    if (options.seed) config.ea.seed = *options.seed;
    if (options.output_dir) config.output_dir = *options.output_dir;
    const auto context = config.context(options.threads);

    evo::RunOptions run;
    run.output_dir = config.output_dir;
    run.on_generation = [&](const evo::GenerationStats& s) {
      out << "gen " << s.generation << "  best_f " << fixed(s.best_fitness, 4) << "  mean_f "
          << fixed(s.mean_fitness, 4) << "  best_size " << s.best_size << "  mean_size "
          << fixed(s.mean_size, 1) << '\n'
          << std::flush;
    };
    const auto result = evo::run_evolution(config.ea, context, run);

    const auto pruned = bt::prune(result.best.tree);
    write_text(config.output_dir / "best.bt", bt::serialize(result.best.tree));
    write_text(config.output_dir / "best_pruned.bt", bt::serialize(pruned));
    out << "best individual: generation " << result.best_generation << ", fitness "
        << fixed(result.best.fitness, 4) << ", " << result.best.size << " nodes (" << pruned.size()
        << " after pruning)\n"
        << "wrote " << (config.output_dir / "archive.csv").string() << ", "
        << (config.output_dir / "best.bt").string() << ", " << (config.output_dir / "best_pruned.bt").string()
        << '\n';
    return kExitOk;
  });
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.runs == 0) throw UsageError("--runs must be at least 1");
    const auto config = config_or_default(options.config);
    const auto tree = load_tree(options.tree, err);
    const auto report = eval::validate(tree, options.runs, options.seed, config.context(options.threads));

    auto csv_path = options.csv.value_or(config.output_dir / "validation.csv");
    if (csv_path.has_parent_path()) std::filesystem::create_directories(csv_path.parent_path());
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
    eval::write_validation_csv(csv, report);
    if (!csv) throw std::runtime_error("failed writing " + csv_path.string());

    out << "tree size          " << tree.size() << " nodes\n";
    eval::write_validation_summary(out, report);
    out << "per-run results    " << csv_path.string() << '\n';
    return kExitOk;
  });
}

int cmd_tick(const TickOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bt::Blackboard bb{options.x, options.sigma, options.Sigma, options.Delta, options.r};
    for (auto v : bt::kAllVariables) {
      const auto range = bt::range_of(v);
      if (!range.contains(bb.get(v)))
        throw UsageError(std::string(bt::name_of(v)) + "=" + std::to_string(bb.get(v)) + " outside [" +
                         fixed(range.lo, 0) + ", " + fixed(range.hi, 0) + "]");
    }
    if (!bt::kRudderRange.contains(bb.r)) throw UsageError("r outside [-1, 1]");

    const auto tree = load_tree(options.tree, err);
    std::vector<bt::TraceEntry> trace;
    const auto result = bt::tick_traced(tree, bb, trace);
    const auto depths = tree.node_depths();
    out << "status: " << bt::to_string(result.status) << '\n';
    out << "r: " << result.blackboard.r;
    if (result.last_action) out << " (set by node " << *result.last_action << ")\n";
    else out << " (held)\n";
    out << "evaluated " << trace.size() << " of " << tree.size() << " nodes:\n";
    for (const auto& e : trace) {
      out << "  " << std::string(2 * depths[e.node], ' ') << '[' << e.node << "] "
          << describe(tree.node(e.node).kind) << " -> " << bt::to_string(e.status) << '\n';
    }
    return kExitOk;
  });
}

int cmd_prune(const PruneOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto tree = load_tree(options.tree, err);
    const auto pruned = bt::prune(tree);
    write_text(options.out, bt::serialize(pruned));
    out << tree.size() << " -> " << pruned.size() << " nodes, wrote " << options.out.string() << '\n';
    return kExitOk;
  });
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto config = config_or_default(options.config);
    const auto tree = load_tree(options.tree, err);
    const sim::InitialCondition init{options.x, options.y, options.heading};
    if (!(init.x > 0 && init.x < config.room.width && init.y > 0 && init.y < config.room.length))
      throw UsageError("start position must lie inside the room");
    const auto result = eval::fly(tree, init, config.context(1), {.record_path = true});
    std::ofstream csv(options.out);
    if (!csv) throw std::runtime_error("cannot write " + options.out.string());
    sim::write_trace_csv(csv, result);
    out << sim::to_string(result.outcome) << " after " << fixed(result.flight_time, 2) << " s, |e| = "
        << fixed(result.e_norm(), 3) << " m; trace written to " << options.out.string() << '\n';
    return kExitOk;
  });
}

int cmd_render(const RenderOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto config = config_or_default(options.config);
    if (!(options.x > 0 && options.x < config.room.width && options.y > 0 && options.y < config.room.length))
      throw UsageError("camera position must lie inside the room");
    vision::VisionPipeline pipeline(config.vision);
    const auto f =
        pipeline.sense({options.x, options.y, config.sim.camera_height, options.heading}, config.room);
    vision::write_pgm(options.depth_pgm, pipeline.depth(), 100.0);
    vision::write_pgm(options.disparity_pgm, pipeline.disparity(), 10.0);
    out << "x " << fixed(f.x, 3) << "  sigma " << fixed(f.sigma, 2) << "  Sigma " << fixed(f.Sigma, 4)
        << "  Delta " << fixed(f.Delta, 4) << '\n';
    return kExitOk;
  });
}

}  // namespace btevo::cli
