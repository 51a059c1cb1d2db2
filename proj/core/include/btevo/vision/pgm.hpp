#pragma once

#include <filesystem>

#include "btevo/vision/image.hpp"

namespace btevo::vision {

/// Plain (P2) grayscale PGM; each value is multiplied by `scale`, rounded
/// and clamped to [0, 65535]. Throws std::runtime_error on I/O failure.
void write_pgm(const std::filesystem::path& path, const Image<double>& image, double scale);

}  // namespace btevo::vision
