#include "btevo/evo/checkpoint.hpp"

#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "btevo/bt/dsl.hpp"

namespace btevo::evo {

using nlohmann::json;

namespace {

sim::Outcome outcome_from(const std::string& s) {
  for (auto o : {sim::Outcome::Success, sim::Outcome::Crash, sim::Outcome::Timeout})
    if (s == sim::to_string(o)) return o;
  throw std::runtime_error("unknown outcome '" + s + "'");
}

}  // namespace

void write_checkpoint(const std::filesystem::path& path, std::size_t generation,
                      const Population& population, const InitSet& inits) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open checkpoint " + path.string());
  json header;
  header["generation"] = generation;
  header["inits"] = json::array();
  for (const auto& i : inits.inits) header["inits"].push_back({i.x, i.y, i.heading});
  header["init_ages"] = inits.ages;
  out << header.dump() << '\n';
  for (std::size_t slot = 0; slot < population.size(); ++slot) {
    const auto& ind = population[slot];
    json rec;
    rec["generation"] = generation;
    rec["slot"] = slot;
    rec["tree"] = bt::serialize_compact(ind.tree);
    rec["per_run"] = json::array();
    rec["outcomes"] = json::array();
    for (const auto& r : ind.per_run) {
      rec["per_run"].push_back(r.fitness);
      rec["outcomes"].push_back(sim::to_string(r.outcome));
    }
    rec["fitness"] = ind.fitness;
    rec["size"] = ind.size;
    out << rec.dump() << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing checkpoint " + path.string());
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open checkpoint " + path.string());
  Checkpoint cp;
  std::string line;
  std::size_t line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto rec = json::parse(line);
      if (line_no == 1) {
        cp.generation = rec.at("generation").get<std::size_t>();
        for (const auto& i : rec.at("inits"))
          cp.inits.inits.push_back({i.at(0).get<double>(), i.at(1).get<double>(), i.at(2).get<double>()});
        cp.inits.ages = rec.at("init_ages").get<std::vector<std::size_t>>();
        continue;
      }
      eval::EvaluatedIndividual ind;
      ind.tree = bt::parse(rec.at("tree").get<std::string>()).tree;
      const auto& fit = rec.at("per_run");
      const auto& outcomes = rec.at("outcomes");
      for (std::size_t j = 0; j < fit.size(); ++j) {
        eval::RunRecord r;
        r.fitness = fit.at(j).get<double>();
        r.outcome = outcome_from(outcomes.at(j).get<std::string>());
        ind.per_run.push_back(r);
      }
      ind.fitness = rec.at("fitness").get<double>();
      ind.size = rec.at("size").get<std::size_t>();
      cp.population.push_back(std::move(ind));
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
  }
  return cp;
}

std::string format_archive_row(const GenerationStats& s) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%zu,%.2f", s.generation, s.best_fitness, s.mean_fitness,
                s.best_size, s.mean_size);
  return buf;
}

ArchiveWriter::ArchiveWriter(const std::filesystem::path& path) : path_(path), out_(path) {
  if (!out_) throw std::runtime_error("cannot open archive " + path.string());
  out_ << "gen,best_f,mean_f,best_size,mean_size\n" << std::flush;
}

void ArchiveWriter::append(const GenerationStats& stats) {
  out_ << format_archive_row(stats) << '\n' << std::flush;
  if (!out_) throw std::runtime_error("failed writing archive " + path_.string());
}

}  // namespace btevo::evo
