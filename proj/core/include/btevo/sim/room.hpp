#pragma once

#include <string_view>
#include <optional>

namespace btevo::sim {

/// Room walls. The room spans [0, width] in x and [0, length] in y;
/// North is the wall y = length.
enum class Wall { North, South, East, West };

std::string_view name_of(Wall w) noexcept;
std::optional<Wall> wall_from_name(std::string_view name) noexcept;

struct WindowConfig {
  Wall wall = Wall::North;
  /// Horizontal offset of the window centre from the wall centre, metres,
  /// measured along +x (North/South walls) or +y (East/West walls).
  double centre_offset = 0.0;
  double width = 0.8;
  double height = 0.8;
};

struct Box {
  double min[3];
  double max[3];
};

/// Window opening expressed in plan view.
struct WindowGeometry {
  /// Axis normal to the window wall (0 = x, 1 = y) and the wall coordinate.
  int axis = 1;
  double plane = 0.0;
  /// +1 if the back room lies on the positive side of the plane.
  int outward = 1;
  /// Window centre in plan view.
  double cx = 0.0;
  double cy = 0.0;
  /// Opening along the wall (coordinate on the other horizontal axis).
  double span_lo = 0.0;
  double span_hi = 0.0;
  double z_lo = 0.0;
  double z_hi = 0.0;

  /// Horizontal coordinate along the wall of a plan-view point.
  double along(double x, double y) const noexcept { return axis == 1 ? x : y; }
  double along_centre() const noexcept { return axis == 1 ? cx : cy; }
};

/// Front room with a rectangular window vertically centred on one wall, and
/// an identical back room behind that wall.
struct RoomConfig {
  double width = 8.0;
  double length = 8.0;
  double height = 3.0;
  WindowConfig window;

  /// Throws std::invalid_argument if dimensions are non-positive or the
  /// window does not fit inside its wall.
  void validate() const;

  Box front() const noexcept;
  Box back() const noexcept;
  WindowGeometry window_geometry() const noexcept;
};

}  // namespace btevo::sim
