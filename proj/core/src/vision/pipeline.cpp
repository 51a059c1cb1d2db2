#include "btevo/vision/pipeline.hpp"

namespace btevo::vision {

Features VisionPipeline::sense(const CameraPose& pose, const sim::RoomConfig& room) {
  render_depth(pose, room, camera_, depth_);
  to_disparity(depth_, camera_, disparity_);
  ii_.build(disparity_);
  detection_ = detect_window(ii_, params_);
  return extract_features(ii_, detection_, camera_, params_.epsilon);
}

}  // namespace btevo::vision
