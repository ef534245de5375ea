#include <algorithm>

#include <omp.h>

#include "frogsteg/window_kernels.hpp"

namespace frogsteg::kernels::omp {

// Each thread owns whole rows of windows, so no two threads write the same
// accumulator.
std::vector<WindowSums> windowSums(const ImageView& a, const ImageView& b, const WindowGrid& grid) {
  std::vector<WindowSums> sums(grid.windowCount());
  const int win = grid.window();
  const int rows = grid.rows();
  const std::size_t width = static_cast<std::size_t>(a.width);
  const std::uint8_t* pa = a.samples.data();
  const std::uint8_t* pb = b.samples.data();

#pragma omp parallel for schedule(static)
  for (int wy = 0; wy < rows; ++wy) {
    const int yEnd = std::min(a.height, (wy + 1) * win);
    for (int y = wy * win; y < yEnd; ++y) {
      std::size_t k = static_cast<std::size_t>(y) * width * 3;
      for (int x = 0; x < a.width; ++x) {
        for (int c = 0; c < 3; ++c, ++k) {
          const std::int64_t u = pa[k];
          const std::int64_t v = pb[k];
          WindowSums& w = sums[grid.windowOf(x, y, c)];
          ++w.count;
          w.sumU += u;
          w.sumV += v;
          w.sumUU += u * u;
          w.sumVV += v * v;
          w.sumUV += u * v;
        }
      }
    }
  }
  return sums;
}

std::int64_t squaredErrorSum(const ImageView& a, const ImageView& b) {
  const std::int64_t n = static_cast<std::int64_t>(a.samples.size());
  const std::uint8_t* pa = a.samples.data();
  const std::uint8_t* pb = b.samples.data();
  std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t d = static_cast<std::int64_t>(pa[k]) - pb[k];
    total += d * d;
  }
  return total;
}

}  // namespace frogsteg::kernels::omp
