#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frogsteg/image.hpp"

// Data-parallel kernels behind the quality metrics. Every kernel has a serial
// reference and an OpenMP version; both produce identical integer sums, so
// results never depend on the thread count.
namespace frogsteg::kernels {

enum class Backend { Serial, OpenMP };

/// Non-overlapping square tiling of each channel plane. Edge windows are
/// clipped to the image. Window index = (channel * rows + wy) * cols + wx.
class WindowGrid {
 public:
  WindowGrid() = default;
  WindowGrid(int width, int height, int window);

  int width() const { return width_; }
  int height() const { return height_; }
  int window() const { return window_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }
  std::size_t windowCount() const { return static_cast<std::size_t>(cols_) * rows_ * 3; }

  std::size_t windowOf(int x, int y, int channel) const {
    return (static_cast<std::size_t>(channel) * rows_ + y / window_) * cols_ + x / window_;
  }
  std::size_t windowOfSample(std::uint64_t sampleIndex) const;

 private:
  int width_ = 0;
  int height_ = 0;
  int window_ = 1;
  int cols_ = 0;
  int rows_ = 0;
};

/// Raw integer moments of one window pair.
struct WindowSums {
  std::int64_t count = 0;
  std::int64_t sumU = 0;
  std::int64_t sumV = 0;
  std::int64_t sumUU = 0;
  std::int64_t sumVV = 0;
  std::int64_t sumUV = 0;

  friend bool operator==(const WindowSums&, const WindowSums&) = default;
};

std::vector<WindowSums> windowSums(const ImageView& a, const ImageView& b, const WindowGrid& grid,
                                   Backend backend);
std::int64_t squaredErrorSum(const ImageView& a, const ImageView& b, Backend backend);

namespace serial {
std::vector<WindowSums> windowSums(const ImageView& a, const ImageView& b, const WindowGrid& grid);
std::int64_t squaredErrorSum(const ImageView& a, const ImageView& b);
}  // namespace serial

namespace omp {
std::vector<WindowSums> windowSums(const ImageView& a, const ImageView& b, const WindowGrid& grid);
std::int64_t squaredErrorSum(const ImageView& a, const ImageView& b);
}  // namespace omp

}  // namespace frogsteg::kernels
