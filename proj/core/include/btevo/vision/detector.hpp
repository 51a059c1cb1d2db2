#pragma once

#include <cstddef>
#include <vector>

#include "btevo/vision/image.hpp"
#include "btevo/vision/integral_image.hpp"

namespace btevo::vision {

struct DetectorParams {
  std::vector<std::size_t> scales{16, 24, 32, 48, 64};
  std::size_t stride = 4;
  double epsilon = 1e-6;
};

struct PixelRect {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t w = 0;
  std::size_t h = 0;
  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

struct WindowDetection {
  /// Horizontal centre of the best candidate, -1 (left edge) to 1 (right edge).
  double x = 0.0;
  /// Window response in [0, 100]; lower means stronger evidence.
  double sigma = 100.0;
  PixelRect rect;
};

/// Sliding multi-scale search for the darkest (lowest-disparity) square
/// relative to the ring around it. Each candidate scores
/// 100 * mean_inside / (mean_ring + epsilon), where the ring extends half
/// the candidate side on every side, clipped to the image. The first
/// minimum in scan order (scale, row, column) wins.
WindowDetection detect_window(const IntegralImage<double>& ii, const DetectorParams& params = {});
WindowDetection detect_window(const DisparityMap& disparity, const DetectorParams& params = {});

}  // namespace btevo::vision
