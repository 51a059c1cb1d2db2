#include "btevo/vision/detector.hpp"

#include <algorithm>
#include <limits>

namespace btevo::vision {

WindowDetection detect_window(const IntegralImage<double>& ii, const DetectorParams& params) {
  const std::size_t W = ii.width(), H = ii.height();
  const std::size_t stride = std::max<std::size_t>(1, params.stride);
  WindowDetection best;
  double best_score = std::numeric_limits<double>::infinity();

  for (const auto side : params.scales) {
    if (side == 0 || side > W || side > H) continue;
    const std::size_t ring = side / 2;
    const double inner_area = double(side * side);
    for (std::size_t y = 0; y + side <= H; y += stride) {
      const std::size_t oy0 = y >= ring ? y - ring : 0;
      const std::size_t oy1 = std::min(H, y + side + ring);
      for (std::size_t x = 0; x + side <= W; x += stride) {
        const std::size_t ox0 = x >= ring ? x - ring : 0;
        const std::size_t ox1 = std::min(W, x + side + ring);
        const double inner = ii.rect_sum_unchecked(x, y, side, side);
        const double outer = ii.rect_sum_unchecked(ox0, oy0, ox1 - ox0, oy1 - oy0);
        const double border_area = double((ox1 - ox0) * (oy1 - oy0)) - inner_area;
        if (border_area <= 0.0) continue;
        const double mean_in = inner / inner_area;
        const double mean_border = (outer - inner) / border_area;
        const double score = 100.0 * mean_in / (mean_border + params.epsilon);
        if (score < best_score) {
          best_score = score;
          best.rect = {x, y, side, side};
        }
      }
    }
  }
  if (best.rect.w == 0) return best;  // no candidate fits
  best.sigma = std::clamp(best_score, 0.0, 100.0);
  const double half_w = 0.5 * double(W);
  best.x = std::clamp((double(best.rect.x) + 0.5 * double(best.rect.w) - half_w) / half_w, -1.0, 1.0);
  return best;
}

WindowDetection detect_window(const DisparityMap& disparity, const DetectorParams& params) {
  return detect_window(IntegralImage<double>(disparity), params);
}

}  // namespace btevo::vision
