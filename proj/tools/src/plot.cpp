#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "btevo/cli/commands.hpp"
#include "btevo/cli/config.hpp"

namespace btevo::cli {

namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

class MalformedCsv : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Csv read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedCsv("cannot read " + path.string());
  Csv csv;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (csv.header.empty()) {
      csv.header = std::move(cells);
      continue;
    }
    if (cells.size() != csv.header.size())
      throw MalformedCsv(path.string() + ":" + std::to_string(n) + ": expected " +
                         std::to_string(csv.header.size()) + " columns, got " + std::to_string(cells.size()));
    csv.rows.push_back(std::move(cells));
  }
  if (csv.header.empty()) throw MalformedCsv(path.string() + ": empty file");
  if (csv.rows.empty()) throw MalformedCsv(path.string() + ": no data rows");
  return csv;
}

double cell_number(const Csv& csv, std::size_t row, const std::string& column) {
  std::size_t col = 0;
  while (col < csv.header.size() && csv.header[col] != column) ++col;
  if (col == csv.header.size()) throw MalformedCsv("missing column '" + column + "'");
  const auto& text = csv.rows[row][col];
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw MalformedCsv("row " + std::to_string(row + 1) + ", column '" + column + "': not a number");
  return v;
}

const std::string& cell(const Csv& csv, std::size_t row, const std::string& column) {
  for (std::size_t c = 0; c < csv.header.size(); ++c)
    if (csv.header[c] == column) return csv.rows[row][c];
  throw MalformedCsv("missing column '" + column + "'");
}

/// Plan view, north up.
class Canvas {
 public:
  explicit Canvas(const sim::RoomConfig& room) : room_(room) {}

  double sx(double x) const { return kMargin + kScale * x; }
  double sy(double y) const { return kMargin + kScale * (room_.length - y); }

  std::string header() const {
    std::ostringstream o;
    const double w = 2 * kMargin + kScale * room_.width;
    const double h = 2 * kMargin + kScale * room_.length + kLegend;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n"
      << "<rect class=\"walls\" x=\"" << sx(0) << "\" y=\"" << sy(room_.length) << "\" width=\""
      << kScale * room_.width << "\" height=\"" << kScale * room_.length
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
    const auto g = room_.window_geometry();
    double x1, y1, x2, y2;
    if (g.axis == 1) {
      x1 = g.span_lo, x2 = g.span_hi, y1 = y2 = g.plane;
    } else {
      y1 = g.span_lo, y2 = g.span_hi, x1 = x2 = g.plane;
    }
    o << "<line class=\"window\" x1=\"" << sx(x1) << "\" y1=\"" << sy(y1) << "\" x2=\"" << sx(x2)
      << "\" y2=\"" << sy(y2) << "\" stroke=\"#3fa7ff\" stroke-width=\"7\"/>\n";
    return o.str();
  }

  double legend_y() const { return 2 * kMargin + kScale * room_.length; }

 private:
  static constexpr double kMargin = 20.0;
  static constexpr double kScale = 60.0;
  static constexpr double kLegend = 60.0;
  sim::RoomConfig room_;
};

const char* outcome_colour(const std::string& outcome) {
  if (outcome == "success") return "#2a9d2a";
  if (outcome == "crash") return "#d62828";
  return "#f08c00";
}

/// Line style per decision mode; "hold" is dotted.
std::string mode_style(const std::string& mode, std::map<std::string, std::size_t>& seen) {
  static const char* colours[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  static const char* dashes[] = {"none", "8,4", "8,3,2,3", "12,3", "4,2", "2,6", "10,2,2,2,2,2"};
  if (mode == "hold") return "stroke=\"#555555\" stroke-dasharray=\"2,3\"";
  const auto [it, inserted] = seen.emplace(mode, seen.size());
  const auto k = it->second % 7;
  return std::string("stroke=\"") + colours[k] + "\" stroke-dasharray=\"" + dashes[k] + "\"";
}

std::string plot_trace(const Csv& csv, const Canvas& canvas) {
  std::ostringstream o;
  o << canvas.header();
  std::map<std::string, std::size_t> modes;
  const std::size_t n = csv.rows.size();
  // The last row is the terminal pose; its mode column holds the outcome.
  std::size_t start = 0;
  while (start + 1 < n) {
    const auto& mode = cell(csv, start, "mode");
    std::size_t end = start + 1;
    while (end + 1 < n && cell(csv, end, "mode") == mode) ++end;
    o << "<polyline class=\"path\" data-mode=\"" << mode << "\" fill=\"none\" stroke-width=\"2\" "
      << mode_style(mode, modes) << " points=\"";
    for (std::size_t i = start; i <= end; ++i)
      o << (i > start ? " " : "") << canvas.sx(cell_number(csv, i, "x")) << ','
        << canvas.sy(cell_number(csv, i, "y"));
    o << "\"/>\n";
    start = end;
  }
  const double x0 = canvas.sx(cell_number(csv, 0, "x")), y0 = canvas.sy(cell_number(csv, 0, "y"));
  o << "<circle class=\"start\" cx=\"" << x0 << "\" cy=\"" << y0 << "\" r=\"5\" fill=\"black\"/>\n";
  const auto& outcome = cell(csv, n - 1, "mode");
  const double xe = canvas.sx(cell_number(csv, n - 1, "x")), ye = canvas.sy(cell_number(csv, n - 1, "y"));
  if (outcome == "success") {
    o << "<path class=\"outcome\" data-outcome=\"success\" d=\"M" << xe - 6 << ',' << ye - 6 << " L" << xe + 6
      << ',' << ye + 6 << " M" << xe - 6 << ',' << ye + 6 << " L" << xe + 6 << ',' << ye - 6
      << "\" stroke=\"" << outcome_colour(outcome) << "\" stroke-width=\"3\"/>\n";
  } else {
    o << "<circle class=\"outcome\" data-outcome=\"" << outcome << "\" cx=\"" << xe << "\" cy=\"" << ye
      << "\" r=\"6\" fill=\"none\" stroke=\"" << outcome_colour(outcome) << "\" stroke-width=\"3\"/>\n";
  }
  double ly = canvas.legend_y();
  o << "<text x=\"20\" y=\"" << ly << "\" font-family=\"sans-serif\" font-size=\"12\">decision modes:";
  for (const auto& [mode, k] : modes) o << " node " << mode;
  o << " (dotted: hold); outcome " << outcome << "</text>\n</svg>\n";
  return o.str();
}

std::string plot_validation(const Csv& csv, const Canvas& canvas) {
  std::ostringstream o;
  o << canvas.header();
  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const double x = canvas.sx(cell_number(csv, i, "init_x"));
    const double y = canvas.sy(cell_number(csv, i, "init_y"));
    const double h = cell_number(csv, i, "init_heading");
    const auto& outcome = cell(csv, i, "outcome");
    ++counts[outcome];
    o << "<g class=\"start\" data-outcome=\"" << outcome << "\"><circle cx=\"" << x << "\" cy=\"" << y
      << "\" r=\"4\" fill=\"" << outcome_colour(outcome) << "\"/><line x1=\"" << x << "\" y1=\"" << y
      << "\" x2=\"" << x + 10 * std::cos(h) << "\" y2=\"" << y - 10 * std::sin(h) << "\" stroke=\""
      << outcome_colour(outcome) << "\"/></g>\n";
  }
  o << "<text x=\"20\" y=\"" << canvas.legend_y() << "\" font-family=\"sans-serif\" font-size=\"12\">";
  for (const auto& [outcome, n] : counts) o << outcome << ": " << n << "  ";
  o << "</text>\n</svg>\n";
  return o.str();
}

}  // namespace

int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto config = options.config ? load_config(*options.config) : RunConfig{};
    const auto csv = read_csv(options.in);
    const Canvas canvas(config.room);
    std::string svg;
    if (!csv.header.empty() && csv.header[0] == "t") svg = plot_trace(csv, canvas);
    else if (!csv.header.empty() && csv.header[0] == "init_x") svg = plot_validation(csv, canvas);
    else throw MalformedCsv(options.in.string() + ": neither a path trace nor a validation CSV");
    std::ofstream file(options.out);
    if (!file) {
      err << "error: cannot write " << options.out.string() << '\n';
      return kExitFailure;
    }
    file << svg;
    out << "wrote " << options.out.string() << '\n';
    return kExitOk;
  } catch (const MalformedCsv& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace btevo::cli
