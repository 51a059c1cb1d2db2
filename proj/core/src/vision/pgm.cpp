#include "btevo/vision/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace btevo::vision {

void write_pgm(const std::filesystem::path& path, const Image<double>& image, double scale) {
  std::vector<long> values;
  values.reserve(image.size());
  long max_value = 1;
  for (double v : image.pixels()) {
    const long q = std::clamp(std::lround(v * scale), 0L, 65535L);
    values.push_back(q);
    max_value = std::max(max_value, q);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "P2\n" << image.width() << ' ' << image.height() << '\n' << max_value << '\n';
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x)
      out << (x ? " " : "") << values[y * image.width() + x];
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace btevo::vision
