#include "btevo/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace btevo::cli {

namespace pt = boost::property_tree;

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ConfigError("config key '" + key + "': cannot parse '" + text + "' as a number");
  return value;
}

using Setter = std::function<void(RunConfig&, const std::string& key, const std::string& value)>;

template <typename T, typename Field>
Setter number(Field field) {
  return [field](RunConfig& c, const std::string& key, const std::string& v) {
    field(c) = parse_number<T>(key, v);
  };
}

struct Schema {
  std::map<std::string, std::map<std::string, Setter>> sections;
  // A section listed here must set every key when it appears at all.
  std::set<std::string> complete_sections{"ea"};
};

const Schema& schema() {
  static const Schema s = [] {
    Schema s;
    auto& ea = s.sections["ea"];
    ea["max_generations"] = number<std::size_t>([](RunConfig& c) -> auto& { return c.ea.max_generations; });
    ea["population_size"] = number<std::size_t>([](RunConfig& c) -> auto& { return c.ea.population_size; });
    ea["tournament_fraction"] = number<double>([](RunConfig& c) -> auto& { return c.ea.tournament_fraction; });
    ea["elitism_rate"] = number<double>([](RunConfig& c) -> auto& { return c.ea.elitism_rate; });
    ea["crossover_rate"] = number<double>([](RunConfig& c) -> auto& { return c.ea.crossover_rate; });
    ea["mutation_rate"] = number<double>([](RunConfig& c) -> auto& { return c.ea.mutation_rate; });
    ea["hcc_rate"] = number<double>([](RunConfig& c) -> auto& { return c.ea.hcc_rate; });
    ea["max_depth"] = number<std::size_t>([](RunConfig& c) -> auto& { return c.ea.max_depth; });
    ea["max_children"] = number<std::size_t>([](RunConfig& c) -> auto& { return c.ea.max_children; });
    ea["runs_per_individual"] = number<std::size_t>([](RunConfig& c) -> auto& { return c.ea.runs_per_individual; });
    ea["seed"] = number<std::uint64_t>([](RunConfig& c) -> auto& { return c.ea.seed; });

    auto& room = s.sections["room"];
    room["width"] = number<double>([](RunConfig& c) -> auto& { return c.room.width; });
    room["length"] = number<double>([](RunConfig& c) -> auto& { return c.room.length; });
    room["height"] = number<double>([](RunConfig& c) -> auto& { return c.room.height; });
    room["window_offset"] = number<double>([](RunConfig& c) -> auto& { return c.room.window.centre_offset; });
    room["window_width"] = number<double>([](RunConfig& c) -> auto& { return c.room.window.width; });
    room["window_height"] = number<double>([](RunConfig& c) -> auto& { return c.room.window.height; });
    room["window_wall"] = [](RunConfig& c, const std::string& key, const std::string& v) {
      const auto wall = sim::wall_from_name(v);
      if (!wall) throw ConfigError("config key '" + key + "': expected north, south, east or west");
      c.room.window.wall = *wall;
    };

    auto& sim = s.sections["sim"];
    sim["speed"] = number<double>([](RunConfig& c) -> auto& { return c.sim.speed; });
    sim["max_turn_rate"] = number<double>([](RunConfig& c) -> auto& { return c.sim.max_turn_rate; });
    sim["actuator_tau"] = number<double>([](RunConfig& c) -> auto& { return c.sim.actuator_tau; });
    sim["decision_rate"] = number<double>([](RunConfig& c) -> auto& { return c.sim.decision_rate; });
    sim["physics_substeps"] = number<int>([](RunConfig& c) -> auto& { return c.sim.physics_substeps; });
    sim["timeout"] = number<double>([](RunConfig& c) -> auto& { return c.sim.timeout; });
    sim["camera_height"] = number<double>([](RunConfig& c) -> auto& { return c.sim.camera_height; });
    sim["spawn_margin"] = number<double>([](RunConfig& c) -> auto& { return c.sim.spawn_margin; });

    auto& vision = s.sections["vision"];
    vision["stride"] = number<std::size_t>([](RunConfig& c) -> auto& { return c.vision.stride; });
    vision["epsilon"] = number<double>([](RunConfig& c) -> auto& { return c.vision.epsilon; });
    vision["scales"] = [](RunConfig& c, const std::string& key, const std::string& v) {
      c.vision.scales.clear();
      std::stringstream ss(v);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ConfigError("config key '" + key + "': empty scale");
        c.vision.scales.push_back(parse_number<std::size_t>(key, item.substr(b, e - b + 1)));
      }
      if (c.vision.scales.empty()) throw ConfigError("config key '" + key + "': no scales given");
    };

    auto& output = s.sections["output"];
    output["dir"] = [](RunConfig& c, const std::string&, const std::string& v) { c.output_dir = v; };
    return s;
  }();
  return s;
}

}  // namespace

eval::EvaluationContext RunConfig::context(unsigned threads) const {
  eval::EvaluationContext ctx;
  ctx.room = room;
  ctx.sim = sim;
  ctx.detector = vision;
  ctx.threads = threads;
  return ctx;
}

void RunConfig::validate() const {
  try {
    ea.validate();
    room.validate();
    sim.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (vision.stride == 0) throw ConfigError("vision.stride must be >= 1");
  if (!(vision.epsilon > 0)) throw ConfigError("vision.epsilon must be positive");
  for (auto s : vision.scales)
    if (s == 0 || s % 2 != 0) throw ConfigError("vision.scales must be positive even sizes");
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config line " + std::to_string(e.line()) + ": " + e.message());
  }

  RunConfig config;
  const auto& sch = schema();
  for (const auto& [section, body] : tree) {
    const auto it = sch.sections.find(section);
    if (it == sch.sections.end()) throw ConfigError("unknown config section [" + section + "]");
    if (body.empty() && !body.data().empty())
      throw ConfigError("config key '" + section + "' must be inside a section");
    for (const auto& [key, value] : body) {
      const auto setter = it->second.find(key);
      if (setter == it->second.end()) throw ConfigError("unknown config key '" + section + "." + key + "'");
      setter->second(config, section + "." + key, value.data());
    }
  }
  for (const auto& section : sch.complete_sections) {
    const auto body = tree.get_child_optional(section);
    if (!body) continue;
    for (const auto& [key, setter] : sch.sections.at(section))
      if (body->find(key) == body->not_found())
        throw ConfigError("missing config key '" + section + "." + key + "'");
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const RunConfig& c) {
  auto num = [](double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  std::ostringstream o;
  o << "[ea]\n"
    << "max_generations = " << c.ea.max_generations << '\n'
    << "population_size = " << c.ea.population_size << '\n'
    << "tournament_fraction = " << num(c.ea.tournament_fraction) << '\n'
    << "elitism_rate = " << num(c.ea.elitism_rate) << '\n'
    << "crossover_rate = " << num(c.ea.crossover_rate) << '\n'
    << "mutation_rate = " << num(c.ea.mutation_rate) << '\n'
    << "hcc_rate = " << num(c.ea.hcc_rate) << '\n'
    << "max_depth = " << c.ea.max_depth << '\n'
    << "max_children = " << c.ea.max_children << '\n'
    << "runs_per_individual = " << c.ea.runs_per_individual << '\n'
    << "seed = " << c.ea.seed << "\n\n"
    << "[room]\n"
    << "width = " << num(c.room.width) << '\n'
    << "length = " << num(c.room.length) << '\n'
    << "height = " << num(c.room.height) << '\n'
    << "window_wall = " << sim::name_of(c.room.window.wall) << '\n'
    << "window_offset = " << num(c.room.window.centre_offset) << '\n'
    << "window_width = " << num(c.room.window.width) << '\n'
    << "window_height = " << num(c.room.window.height) << "\n\n"
    << "[sim]\n"
    << "speed = " << num(c.sim.speed) << '\n'
    << "max_turn_rate = " << num(c.sim.max_turn_rate) << '\n'
    << "actuator_tau = " << num(c.sim.actuator_tau) << '\n'
    << "decision_rate = " << num(c.sim.decision_rate) << '\n'
    << "physics_substeps = " << c.sim.physics_substeps << '\n'
    << "timeout = " << num(c.sim.timeout) << '\n'
    << "camera_height = " << num(c.sim.camera_height) << '\n'
    << "spawn_margin = " << num(c.sim.spawn_margin) << "\n\n"
    << "[vision]\n"
    << "scales = ";
  for (std::size_t i = 0; i < c.vision.scales.size(); ++i) o << (i ? "," : "") << c.vision.scales[i];
  o << '\n'
    << "stride = " << c.vision.stride << '\n'
    << "epsilon = " << num(c.vision.epsilon) << "\n\n"
    << "[output]\n"
    << "dir = " << c.output_dir.string() << '\n';
  return o.str();
}

}  // namespace btevo::cli
