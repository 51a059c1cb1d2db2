#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "btevo/evo/population.hpp"

namespace btevo::evo {

/// JSON Lines: a header record {"generation", "inits", "init_ages"} followed
/// by one record per individual {"generation", "slot", "tree", "per_run",
/// "outcomes", "fitness", "size"}, where "tree" is the compact DSL text.
void write_checkpoint(const std::filesystem::path& path, std::size_t generation,
                      const Population& population, const InitSet& inits);

struct Checkpoint {
  std::size_t generation = 0;
  InitSet inits;
  Population population;
};

/// Throws std::runtime_error on I/O or format errors.
Checkpoint read_checkpoint(const std::filesystem::path& path);

/// Per-generation summary CSV: gen,best_f,mean_f,best_size,mean_size.
/// Each row is flushed as written so an interrupted run leaves a readable
/// file.
class ArchiveWriter {
 public:
  explicit ArchiveWriter(const std::filesystem::path& path);
  void append(const GenerationStats& stats);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

std::string format_archive_row(const GenerationStats& stats);

}  // namespace btevo::evo
