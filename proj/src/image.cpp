#include "frogsteg/image.hpp"

#include <string>

#include "frogsteg/errors.hpp"

namespace frogsteg {

void ImageView::validate() const {
  if (width < 0 || height < 0 || samples.size() != sampleCount()) {
    throw ValidationError("image view of " + std::to_string(width) + "x" + std::to_string(height) +
                          " holds " + std::to_string(samples.size()) + " samples, expected " +
                          std::to_string(sampleCount()));
  }
}

RasterImage::RasterImage(int width, int height)
    : width_(width), height_(height),
      samples_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * kChannels, 0) {
  if (width < 0 || height < 0) throw ValidationError("negative image dimensions");
}

RasterImage::RasterImage(int width, int height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  view().validate();
}

std::uint8_t& RasterImage::at(int x, int y, int channel) {
  return samples_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + channel];
}

std::uint8_t RasterImage::at(int x, int y, int channel) const {
  return samples_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + channel];
}

void requireSameShape(const ImageView& a, const ImageView& b) {
  a.validate();
  b.validate();
  if (a.width != b.width || a.height != b.height) {
    throw ValidationError("image dimensions differ: " + std::to_string(a.width) + "x" +
                          std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                          std::to_string(b.height));
  }
}

}  // namespace frogsteg
