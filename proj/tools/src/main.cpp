#include <iostream>

#include <CLI11.hpp>

#include "btevo/cli/commands.hpp"

using namespace btevo::cli;

int main(int argc, char** argv) {
  CLI::App app{"Evolve, inspect and validate behaviour trees for the fly-through-window task"};
  app.require_subcommand(1);

  EvolveOptions evolve;
  std::filesystem::path evolve_config;
  std::uint64_t evolve_seed = 0;
  auto* ev = app.add_subcommand("evolve", "Run the evolutionary optimisation");
  ev->add_option("--config", evolve_config, "Run configuration (INI)")->required();
  auto* seed_opt = ev->add_option("--seed", evolve_seed, "Override ea.seed");
  ev->add_option("--threads", evolve.threads, "Parallel episode workers")->check(CLI::PositiveNumber);
  ev->add_option("--out", evolve.output_dir, "Override output.dir");

  ValidateOptions validate;
  std::filesystem::path validate_config;
  std::filesystem::path validate_csv;
  auto* va = app.add_subcommand("validate", "Fly a tree from random initial conditions");
  va->add_option("--tree", validate.tree, "Tree file (.bt)")->required();
  va->add_option("--runs", validate.runs, "Number of runs")->capture_default_str();
  va->add_option("--seed", validate.seed, "Initial-condition seed")->capture_default_str();
  auto* va_config = va->add_option("--config", validate_config, "Run configuration (INI)");
  auto* va_csv = va->add_option("--csv", validate_csv, "Per-run CSV output");
  va->add_option("--threads", validate.threads, "Parallel episode workers")->check(CLI::PositiveNumber);

  TickOptions tick;
  auto* ti = app.add_subcommand("tick", "Tick a tree once and print the execution trace");
  ti->add_option("--tree", tick.tree, "Tree file (.bt)")->required();
  ti->add_option("--x", tick.x, "Window x location")->required();
  ti->add_option("--sigma", tick.sigma, "Window response")->required();
  ti->add_option("--Sigma", tick.Sigma, "Sum of disparity")->required();
  ti->add_option("--Delta", tick.Delta, "Horizontal disparity difference")->required();
  ti->add_option("--r", tick.r, "Rudder command before the tick")->capture_default_str();

  PruneOptions prune;
  auto* pr = app.add_subcommand("prune", "Remove nodes that cannot affect behaviour");
  pr->add_option("--tree", prune.tree, "Tree file (.bt)")->required();
  pr->add_option("--out", prune.out, "Output tree file")->required();

  PlotOptions plot;
  std::filesystem::path plot_config;
  auto* pl = app.add_subcommand("plot", "Draw a trace or validation CSV as a top-down SVG");
  pl->add_option("--in", plot.in, "Trace or validation CSV")->required();
  pl->add_option("--out", plot.out, "SVG output")->required();
  auto* pl_config = pl->add_option("--config", plot_config, "Room configuration (INI)");

  SimulateOptions simulate;
  std::filesystem::path simulate_config;
  auto* si = app.add_subcommand("simulate", "Fly one episode and write its path trace CSV");
  si->add_option("--tree", simulate.tree, "Tree file (.bt)")->required();
  si->add_option("--x", simulate.x, "Start x (m)")->required();
  si->add_option("--y", simulate.y, "Start y (m)")->required();
  si->add_option("--heading", simulate.heading, "Start heading (rad, CCW from +x)")->required();
  si->add_option("--out", simulate.out, "Trace CSV output")->required();
  auto* si_config = si->add_option("--config", simulate_config, "Run configuration (INI)");

  RenderOptions render;
  std::filesystem::path render_config;
  auto* re = app.add_subcommand("render", "Dump depth and disparity images as PGM");
  re->add_option("--x", render.x, "Camera x (m)")->required();
  re->add_option("--y", render.y, "Camera y (m)")->required();
  re->add_option("--heading", render.heading, "Heading (rad, CCW from +x)")->required();
  re->add_option("--depth", render.depth_pgm, "Depth PGM output (cm)")->required();
  re->add_option("--disparity", render.disparity_pgm, "Disparity PGM output (x10)")->required();
  auto* re_config = re->add_option("--config", render_config, "Run configuration (INI)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (ev->parsed()) {
    evolve.config = evolve_config;
    if (*seed_opt) evolve.seed = evolve_seed;
    return cmd_evolve(evolve, std::cout, std::cerr);
  }
  if (va->parsed()) {
    if (*va_config) validate.config = validate_config;
    if (*va_csv) validate.csv = validate_csv;
    return cmd_validate(validate, std::cout, std::cerr);
  }
  if (ti->parsed()) return cmd_tick(tick, std::cout, std::cerr);
  if (pr->parsed()) return cmd_prune(prune, std::cout, std::cerr);
  if (pl->parsed()) {
    if (*pl_config) plot.config = plot_config;
    return cmd_plot(plot, std::cout, std::cerr);
  }
  if (si->parsed()) {
    if (*si_config) simulate.config = simulate_config;
    return cmd_simulate(simulate, std::cout, std::cerr);
  }
  if (re->parsed()) {
    if (*re_config) render.config = render_config;
    return cmd_render(render, std::cout, std::cerr);
  }
  return kExitUsage;
}
