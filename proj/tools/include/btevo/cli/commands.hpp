#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

namespace btevo::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct EvolveOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::optional<std::filesystem::path> output_dir;
};

/// Runs the evolution and writes archive.csv, checkpoints/, best.bt and
/// best_pruned.bt to the output directory.
int cmd_evolve(const EvolveOptions& options, std::ostream& out, std::ostream& err);

struct ValidateOptions {
  std::filesystem::path tree;
  std::size_t runs = 250;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> config;
  /// Defaults to <output_dir>/validation.csv.
  std::optional<std::filesystem::path> csv;
  unsigned threads = 1;
};

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);

struct TickOptions {
  std::filesystem::path tree;
  double x = 0.0;
  double sigma = 0.0;
  double Sigma = 0.0;
  double Delta = 0.0;
  double r = 0.0;
};

/// Prints the status, the final r and the evaluated nodes in visiting order.
int cmd_tick(const TickOptions& options, std::ostream& out, std::ostream& err);

struct PruneOptions {
  std::filesystem::path tree;
  std::filesystem::path out;
};

int cmd_prune(const PruneOptions& options, std::ostream& out, std::ostream& err);

struct PlotOptions {
  std::filesystem::path in;
  std::filesystem::path out;
  std::optional<std::filesystem::path> config;
};

/// Top-down SVG of a path trace CSV or a validation CSV.
int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  std::filesystem::path tree;
  double x = 4.0;
  double y = 4.0;
  double heading = 0.0;
  std::optional<std::filesystem::path> config;
  std::filesystem::path out;
};

/// Flies one episode and writes its path trace CSV.
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

struct RenderOptions {
  double x = 4.0;
  double y = 4.0;
  double heading = 0.0;
  std::optional<std::filesystem::path> config;
  std::filesystem::path depth_pgm;
  std::filesystem::path disparity_pgm;
};

/// Writes PGM dumps of the depth (cm) and disparity (x10) images.
int cmd_render(const RenderOptions& options, std::ostream& out, std::ostream& err);

}  // namespace btevo::cli
