#pragma once

#include "btevo/sim/room.hpp"
#include "btevo/vision/camera.hpp"
#include "btevo/vision/image.hpp"

namespace btevo::vision {

/// Camera centre and viewing direction. Heading is measured
/// counter-clockwise from the room +x axis; the optical axis is level.
struct CameraPose {
  double x = 0.0;
  double y = 0.0;
  double z = 1.5;
  double heading = 0.0;
};

/// Distance along a ray (unit or not, `direction` is normalised internally)
/// to the first surface of the two-room geometry. The origin must lie inside
/// the front room.
double cast_ray(const sim::RoomConfig& room, double ox, double oy, double oz, double dx, double dy,
                double dz);

/// Ray-cast depth for every pixel, reusing `out` storage.
void render_depth(const CameraPose& pose, const sim::RoomConfig& room, const CameraModel& camera,
                  DepthImage& out);
DepthImage render_depth(const CameraPose& pose, const sim::RoomConfig& room,
                        const CameraModel& camera = {});

/// d = f * b / depth, elementwise.
void to_disparity(const DepthImage& depth, const CameraModel& camera, DisparityMap& out);
DisparityMap to_disparity(const DepthImage& depth, const CameraModel& camera = {});

}  // namespace btevo::vision
