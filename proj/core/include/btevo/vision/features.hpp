#pragma once

#include "btevo/bt/blackboard.hpp"
#include "btevo/vision/camera.hpp"
#include "btevo/vision/detector.hpp"
#include "btevo/vision/image.hpp"
#include "btevo/vision/integral_image.hpp"

namespace btevo::vision {

/// Condition inputs for one tick.
struct Features {
  double x = 0.0;
  double sigma = 100.0;
  double Sigma = 0.0;
  double Delta = 0.0;

  /// Copies the inputs into bb, leaving bb.r untouched.
  void write_to(bt::Blackboard& bb) const noexcept {
    bb.x = x;
    bb.sigma = sigma;
    bb.Sigma = Sigma;
    bb.Delta = Delta;
  }
};

/// Disparity of the closest credible surface, 0.25 m, used to normalise Sigma.
double saturation_disparity(const CameraModel& camera) noexcept;

/// Sigma = total / (pixels * saturation_disparity), clamped to [0, 1];
/// Delta = (left half - right half) / (total + epsilon), clamped to [-1, 1].
Features extract_features(const IntegralImage<double>& ii, const WindowDetection& detection,
                          const CameraModel& camera, double epsilon = 1e-6);
Features extract_features(const DisparityMap& disparity, const WindowDetection& detection,
                          const CameraModel& camera = {}, double epsilon = 1e-6);

}  // namespace btevo::vision
