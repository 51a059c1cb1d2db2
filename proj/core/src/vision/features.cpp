#include "btevo/vision/features.hpp"

#include <algorithm>

namespace btevo::vision {

double saturation_disparity(const CameraModel& camera) noexcept {
  return camera.disparity_gain() / 0.25;
}

Features extract_features(const IntegralImage<double>& ii, const WindowDetection& detection,
                          const CameraModel& camera, double epsilon) {
  const std::size_t W = ii.width(), H = ii.height();
  const double total = ii.total();
  const double left = ii.rect_sum_unchecked(0, 0, W / 2, H);
  const double right = ii.rect_sum_unchecked(W - W / 2, 0, W / 2, H);
  Features f;
  f.x = detection.x;
  f.sigma = detection.sigma;
  f.Sigma = std::clamp(total / (double(W * H) * saturation_disparity(camera)), 0.0, 1.0);
  f.Delta = std::clamp((left - right) / (total + epsilon), -1.0, 1.0);
  return f;
}

Features extract_features(const DisparityMap& disparity, const WindowDetection& detection,
                          const CameraModel& camera, double epsilon) {
  return extract_features(IntegralImage<double>(disparity), detection, camera, epsilon);
}

}  // namespace btevo::vision
