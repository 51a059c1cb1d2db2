#include "btevo/sim/room.hpp"

#include <stdexcept>

namespace btevo::sim {

std::string_view name_of(Wall w) noexcept {
  switch (w) {
    case Wall::North: return "north";
    case Wall::South: return "south";
    case Wall::East: return "east";
    case Wall::West: return "west";
  }
  return "?";
}

std::optional<Wall> wall_from_name(std::string_view name) noexcept {
  for (auto w : {Wall::North, Wall::South, Wall::East, Wall::West})
    if (name_of(w) == name) return w;
  return std::nullopt;
}

void RoomConfig::validate() const {
  if (!(width > 0 && length > 0 && height > 0))
    throw std::invalid_argument("room dimensions must be positive");
  if (!(window.width > 0 && window.height > 0))
    throw std::invalid_argument("window dimensions must be positive");
  const auto g = window_geometry();
  const double wall_len = g.axis == 1 ? width : length;
  if (g.span_lo < 0 || g.span_hi > wall_len)
    throw std::invalid_argument("window does not fit horizontally in its wall");
  if (window.height > height) throw std::invalid_argument("window is taller than the room");
}

Box RoomConfig::front() const noexcept { return {{0.0, 0.0, 0.0}, {width, length, height}}; }

Box RoomConfig::back() const noexcept {
  Box b = front();
  switch (window.wall) {
    case Wall::North: b.min[1] = length; b.max[1] = 2 * length; break;
    case Wall::South: b.min[1] = -length; b.max[1] = 0; break;
    case Wall::East: b.min[0] = width; b.max[0] = 2 * width; break;
    case Wall::West: b.min[0] = -width; b.max[0] = 0; break;
  }
  return b;
}

WindowGeometry RoomConfig::window_geometry() const noexcept {
  WindowGeometry g;
  const double half = 0.5 * window.width;
  switch (window.wall) {
    case Wall::North:
    case Wall::South:
      g.axis = 1;
      g.plane = window.wall == Wall::North ? length : 0.0;
      g.outward = window.wall == Wall::North ? 1 : -1;
      g.cx = 0.5 * width + window.centre_offset;
      g.cy = g.plane;
      break;
    case Wall::East:
    case Wall::West:
      g.axis = 0;
      g.plane = window.wall == Wall::East ? width : 0.0;
      g.outward = window.wall == Wall::East ? 1 : -1;
      g.cx = g.plane;
      g.cy = 0.5 * length + window.centre_offset;
      break;
  }
  g.span_lo = g.along_centre() - half;
  g.span_hi = g.along_centre() + half;
  g.z_lo = 0.5 * (height - window.height);
  g.z_hi = 0.5 * (height + window.height);
  return g;
}

}  // namespace btevo::sim
