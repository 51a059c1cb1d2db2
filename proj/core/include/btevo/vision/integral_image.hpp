#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "btevo/vision/image.hpp"

namespace btevo::vision {

/// Summed-area table with a zero first row and column:
/// at(x, y) is the sum of I(x', y') over x' < x, y' < y.
template <typename T>
class IntegralImage {
 public:
  IntegralImage() = default;

  template <typename Pixel>
  explicit IntegralImage(const Image<Pixel>& image) {
    build(image);
  }

  /// Rebuilds in place, reusing storage.
  template <typename Pixel>
  void build(const Image<Pixel>& image) {
    width_ = image.width();
    height_ = image.height();
    const auto stride = width_ + 1;
    table_.assign(stride * (height_ + 1), T{});
    for (std::size_t y = 0; y < height_; ++y) {
      T row_sum{};
      const auto src = image.row(y);
      const T* above = &table_[y * stride];
      T* dst = &table_[(y + 1) * stride];
      for (std::size_t x = 0; x < width_; ++x) {
        row_sum += static_cast<T>(src[x]);
        dst[x + 1] = above[x + 1] + row_sum;
      }
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  T at(std::size_t x, std::size_t y) const {
    if (x > width_ || y > height_) throw std::out_of_range("integral image index out of range");
    return table_[y * (width_ + 1) + x];
  }

  T total() const noexcept { return table_.empty() ? T{} : table_.back(); }

  /// Sum of pixels in [x, x+w) x [y, y+h).
  T rect_sum(std::size_t x, std::size_t y, std::size_t w, std::size_t h) const {
    if (x + w > width_ || y + h > height_)
      throw std::out_of_range("rectangle (" + std::to_string(x) + "," + std::to_string(y) + "," +
                              std::to_string(w) + "," + std::to_string(h) + ") exceeds image");
    return rect_sum_unchecked(x, y, w, h);
  }

  T rect_sum_unchecked(std::size_t x, std::size_t y, std::size_t w, std::size_t h) const noexcept {
    const auto s = width_ + 1;
    return table_[(y + h) * s + x + w] + table_[y * s + x] - table_[y * s + x + w] -
           table_[(y + h) * s + x];
  }

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> table_;
};

}  // namespace btevo::vision
