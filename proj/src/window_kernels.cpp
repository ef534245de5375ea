#include "frogsteg/window_kernels.hpp"

#include "frogsteg/errors.hpp"

namespace frogsteg::kernels {

WindowGrid::WindowGrid(int width, int height, int window)
    : width_(width), height_(height), window_(window) {
  if (window < 1) throw ValidationError("window size must be positive");
  cols_ = (width + window - 1) / window;
  rows_ = (height + window - 1) / window;
}

std::size_t WindowGrid::windowOfSample(std::uint64_t sampleIndex) const {
  const std::uint64_t pixel = sampleIndex / 3;
  const int channel = static_cast<int>(sampleIndex % 3);
  const int x = static_cast<int>(pixel % static_cast<std::uint64_t>(width_));
  const int y = static_cast<int>(pixel / static_cast<std::uint64_t>(width_));
  return windowOf(x, y, channel);
}

std::vector<WindowSums> windowSums(const ImageView& a, const ImageView& b, const WindowGrid& grid,
                                   Backend backend) {
  requireSameShape(a, b);
  if (grid.width() != a.width || grid.height() != a.height) {
    throw ValidationError("window grid does not match image dimensions");
  }
  return backend == Backend::Serial ? serial::windowSums(a, b, grid) : omp::windowSums(a, b, grid);
}

std::int64_t squaredErrorSum(const ImageView& a, const ImageView& b, Backend backend) {
  requireSameShape(a, b);
  return backend == Backend::Serial ? serial::squaredErrorSum(a, b) : omp::squaredErrorSum(a, b);
}

}  // namespace frogsteg::kernels
