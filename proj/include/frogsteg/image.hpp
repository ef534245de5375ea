#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace frogsteg {

inline constexpr int kChannels = 3;
inline constexpr double kMaxSampleValue = 255.0;

/// Non-owning view of an 8-bit RGB raster. Samples are row-major and
/// channel-interleaved (R,G,B per pixel), so sample k belongs to pixel
/// k / 3 and channel k % 3.
struct ImageView {
  int width = 0;
  int height = 0;
  std::span<const std::uint8_t> samples;

  std::size_t pixelCount() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
  std::size_t sampleCount() const { return pixelCount() * kChannels; }
  bool empty() const { return samples.empty(); }
  /// Throws ValidationError unless samples.size() == width*height*3.
  void validate() const;
};

/// Owning RGB raster.
class RasterImage {
 public:
  RasterImage() = default;
  RasterImage(int width, int height);
  RasterImage(int width, int height, std::vector<std::uint8_t> samples);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t sampleCount() const { return samples_.size(); }

  std::span<std::uint8_t> samples() { return samples_; }
  std::span<const std::uint8_t> samples() const { return samples_; }
  std::uint8_t& at(int x, int y, int channel);
  std::uint8_t at(int x, int y, int channel) const;

  ImageView view() const { return {width_, height_, samples_}; }
  operator ImageView() const { return view(); }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> samples_;
};

/// Throws ValidationError when the two views differ in width or height.
void requireSameShape(const ImageView& a, const ImageView& b);

}  // namespace frogsteg
