#pragma once

#include "btevo/sim/room.hpp"
#include "btevo/vision/camera.hpp"
#include "btevo/vision/detector.hpp"
#include "btevo/vision/features.hpp"
#include "btevo/vision/integral_image.hpp"
#include "btevo/vision/render.hpp"

namespace btevo::vision {

/// Render -> disparity -> integral image -> detection -> features. Owns its
/// scratch buffers; use one instance per thread.
class VisionPipeline {
 public:
  explicit VisionPipeline(DetectorParams params = {}, CameraModel camera = {})
      : params_(std::move(params)), camera_(camera) {}

  Features sense(const CameraPose& pose, const sim::RoomConfig& room);

  const DepthImage& depth() const noexcept { return depth_; }
  const DisparityMap& disparity() const noexcept { return disparity_; }
  const WindowDetection& detection() const noexcept { return detection_; }
  const CameraModel& camera() const noexcept { return camera_; }
  const DetectorParams& params() const noexcept { return params_; }

 private:
  DetectorParams params_;
  CameraModel camera_;
  DepthImage depth_;
  DisparityMap disparity_;
  IntegralImage<double> ii_;
  WindowDetection detection_;
};

}  // namespace btevo::vision
