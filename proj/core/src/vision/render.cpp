#include "btevo/vision/render.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace btevo::vision {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Ray parameter at which a ray starting inside (or level with) the box
/// leaves it through the walls of the given horizontal axes.
struct Exit {
  double t = kInf;
  int axis = -1;
  double plane = 0.0;
};

Exit horizontal_exit(const sim::Box& box, double ox, double oy, double dx, double dy) noexcept {
  Exit e;
  const double o[2] = {ox, oy};
  const double d[2] = {dx, dy};
  for (int a = 0; a < 2; ++a) {
    if (d[a] == 0.0) continue;
    const double plane = d[a] > 0 ? box.max[a] : box.min[a];
    const double t = (plane - o[a]) / d[a];
    if (t < e.t) e = {t, a, plane};
  }
  return e;
}

double vertical_exit(const sim::Box& box, double oz, double dz) noexcept {
  if (dz > 0) return (box.max[2] - oz) / dz;
  if (dz < 0) return (box.min[2] - oz) / dz;
  return kInf;
}

}  // namespace

double cast_ray(const sim::RoomConfig& room, double ox, double oy, double oz, double dx, double dy,
                double dz) {
  const double norm = std::sqrt(dx * dx + dy * dy + dz * dz);
  dx /= norm, dy /= norm, dz /= norm;
  const auto front = room.front();
  const auto g = room.window_geometry();
  const auto wall = horizontal_exit(front, ox, oy, dx, dy);
  const double tz = vertical_exit(front, oz, dz);
  if (tz <= wall.t) return tz;
  if (wall.axis == g.axis && wall.plane == g.plane) {
    const double along = g.axis == 1 ? ox + wall.t * dx : oy + wall.t * dy;
    const double z = oz + wall.t * dz;
    if (along > g.span_lo && along < g.span_hi && z > g.z_lo && z < g.z_hi) {
      const auto back = horizontal_exit(room.back(), ox, oy, dx, dy);
      return std::min(back.t, tz);
    }
  }
  return wall.t;
}

void render_depth(const CameraPose& pose, const sim::RoomConfig& room, const CameraModel& camera,
                  DepthImage& out) {
  if (out.width() != camera.width || out.height() != camera.height)
    out = DepthImage(camera.width, camera.height);

  const double fx = camera.fx(), fy = camera.fy();
  const double ch = std::cos(pose.heading), sh = std::sin(pose.heading);
  const auto front = room.front();
  const auto back = room.back();
  const auto g = room.window_geometry();

  // Rays are parameterised with a unit forward component, so the wall exit
  // depends only on the column and the floor/ceiling exit only on the row.
  const std::size_t W = camera.width, H = camera.height;
  std::vector<double> wall_t(W), back_t(W), horiz2(W);
  std::vector<char> window_column(W);
  for (std::size_t col = 0; col < W; ++col) {
    const double s = camera.u(col) / fx;  // +u is right of the heading
    const double dx = ch + s * sh;
    const double dy = sh - s * ch;
    horiz2[col] = dx * dx + dy * dy;
    const auto wall = horizontal_exit(front, pose.x, pose.y, dx, dy);
    wall_t[col] = wall.t;
    window_column[col] = 0;
    back_t[col] = kInf;
    if (wall.axis == g.axis && wall.plane == g.plane) {
      const double along = g.axis == 1 ? pose.x + wall.t * dx : pose.y + wall.t * dy;
      if (along > g.span_lo && along < g.span_hi) {
        window_column[col] = 1;
        back_t[col] = horizontal_exit(back, pose.x, pose.y, dx, dy).t;
      }
    }
  }

  for (std::size_t row = 0; row < H; ++row) {
    const double dz = -camera.v(row) / fy;
    const double dz2 = dz * dz;
    const double tz = vertical_exit(front, pose.z, dz);
    auto dst = out.row(row);
    for (std::size_t col = 0; col < W; ++col) {
      double t = tz;
      if (wall_t[col] < tz) {
        t = wall_t[col];
        if (window_column[col]) {
          const double z = pose.z + t * dz;
          if (z > g.z_lo && z < g.z_hi) t = std::min(back_t[col], tz);
        }
      }
      dst[col] = t * std::sqrt(horiz2[col] + dz2);
    }
  }
}

DepthImage render_depth(const CameraPose& pose, const sim::RoomConfig& room, const CameraModel& camera) {
  DepthImage out;
  render_depth(pose, room, camera, out);
  return out;
}

void to_disparity(const DepthImage& depth, const CameraModel& camera, DisparityMap& out) {
  if (out.width() != depth.width() || out.height() != depth.height())
    out = DisparityMap(depth.width(), depth.height());
  const double gain = camera.disparity_gain();
  const auto src = depth.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = gain / src[i];
}

DisparityMap to_disparity(const DepthImage& depth, const CameraModel& camera) {
  DisparityMap out;
  to_disparity(depth, camera, out);
  return out;
}

}  // namespace btevo::vision
