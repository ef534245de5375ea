#include "frogsteg/textures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "frogsteg/sfla.hpp"

namespace frogsteg::textures {

namespace {

using Color = std::array<double, 3>;

std::uint8_t toSample(double v) { return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L)); }

Color randomColor(sfla::Rng& rng, double lo = 0.0, double hi = 255.0) {
  return {lo + rng.uniform() * (hi - lo), lo + rng.uniform() * (hi - lo), lo + rng.uniform() * (hi - lo)};
}

struct Rect {
  int x0, y0, x1, y1;
};

Rect randomRect(sfla::Rng& rng, int width, int height) {
  const int w = std::max(1, static_cast<int>(width * (0.1 + 0.4 * rng.uniform())));
  const int h = std::max(1, static_cast<int>(height * (0.1 + 0.4 * rng.uniform())));
  const int x0 = static_cast<int>((width - w) * rng.uniform());
  const int y0 = static_cast<int>((height - h) * rng.uniform());
  return {x0, y0, x0 + w, y0 + h};
}

}  // namespace

RasterImage generate(int width, int height, std::uint64_t seed) {
  sfla::Rng rng(seed ^ 0x9E3779B97F4A7C15ULL);
  RasterImage image(width, height);

  const Color from = randomColor(rng);
  const Color to = randomColor(rng);
  const double angle = rng.uniform() * 2.0 * std::numbers::pi;
  const double dx = std::cos(angle);
  const double dy = std::sin(angle);
  const double span = std::abs(dx) * width + std::abs(dy) * height + 1.0;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double t = std::clamp((dx * x + dy * y) / span + 0.5, 0.0, 1.0);
      for (int c = 0; c < 3; ++c) image.at(x, y, c) = toSample(from[c] + t * (to[c] - from[c]));
    }
  }

  const int flatPatches = 1 + static_cast<int>(rng.uniform() * 3);
  for (int p = 0; p < flatPatches; ++p) {
    const Rect r = randomRect(rng, width, height);
    const Color color = randomColor(rng);
    for (int y = r.y0; y < r.y1; ++y)
      for (int x = r.x0; x < r.x1; ++x)
        for (int c = 0; c < 3; ++c) image.at(x, y, c) = toSample(color[c]);
  }

  const int noisePatches = 1 + static_cast<int>(rng.uniform() * 4);
  for (int p = 0; p < noisePatches; ++p) {
    const Rect r = randomRect(rng, width, height);
    const Color base = randomColor(rng, 40.0, 215.0);
    const double amplitude = 4.0 + rng.uniform() * 60.0;
    for (int y = r.y0; y < r.y1; ++y)
      for (int x = r.x0; x < r.x1; ++x)
        for (int c = 0; c < 3; ++c) image.at(x, y, c) = toSample(base[c] + amplitude * (rng.uniform() - 0.5) * 2.0);
  }

  const Rect stripes = randomRect(rng, width, height);
  const double period = 3.0 + rng.uniform() * 20.0;
  const double contrast = 10.0 + rng.uniform() * 80.0;
  const Color stripeBase = randomColor(rng, 60.0, 195.0);
  for (int y = stripes.y0; y < stripes.y1; ++y) {
    for (int x = stripes.x0; x < stripes.x1; ++x) {
      const double wave = std::sin(2.0 * std::numbers::pi * (x + 0.5 * y) / period);
      for (int c = 0; c < 3; ++c) image.at(x, y, c) = toSample(stripeBase[c] + contrast * wave);
    }
  }
  return image;
}

RasterImage randomImage(int width, int height, std::uint64_t seed) {
  sfla::Rng rng(seed);
  RasterImage image(width, height);
  for (auto& s : image.samples()) s = static_cast<std::uint8_t>(rng.next() & 0xFF);
  return image;
}

}  // namespace frogsteg::textures
