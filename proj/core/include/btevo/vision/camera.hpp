#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

namespace btevo::vision {

/// Pinhole model of one camera of the stereo pair. The principal point sits
/// at the image centre; pixel (i, j) is sampled through its centre
/// (i + 0.5, j + 0.5).
struct CameraModel {
  std::size_t width = 128;
  std::size_t height = 96;
  double hfov_deg = 60.0;
  double vfov_deg = 45.0;
  double baseline = 0.06;  // metres

  double fx() const noexcept { return 0.5 * double(width) / std::tan(0.5 * hfov_deg * std::numbers::pi / 180.0); }
  double fy() const noexcept { return 0.5 * double(height) / std::tan(0.5 * vfov_deg * std::numbers::pi / 180.0); }

  /// Image-plane offsets of a pixel centre from the principal point, in
  /// pixels; +u is right, +v is down.
  double u(std::size_t column) const noexcept { return double(column) + 0.5 - 0.5 * double(width); }
  double v(std::size_t row) const noexcept { return double(row) + 0.5 - 0.5 * double(height); }

  /// f * b, the disparity of a surface at 1 m.
  double disparity_gain() const noexcept { return fx() * baseline; }
};

}  // namespace btevo::vision
