#include "frogsteg/window_kernels.hpp"

namespace frogsteg::kernels::serial {

std::vector<WindowSums> windowSums(const ImageView& a, const ImageView& b, const WindowGrid& grid) {
  std::vector<WindowSums> sums(grid.windowCount());
  std::size_t k = 0;
  for (int y = 0; y < a.height; ++y) {
    for (int x = 0; x < a.width; ++x) {
      for (int c = 0; c < 3; ++c, ++k) {
        const std::int64_t u = a.samples[k];
        const std::int64_t v = b.samples[k];
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
  return sums;
}

std::int64_t squaredErrorSum(const ImageView& a, const ImageView& b) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    const std::int64_t d = static_cast<std::int64_t>(a.samples[k]) - b.samples[k];
    total += d * d;
  }
  return total;
}

}  // namespace frogsteg::kernels::serial
