#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "frogsteg/image.hpp"

namespace frogsteg::media {

std::vector<std::uint8_t> readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

// Images. Only lossless 8-bit RGB rasters are accepted as covers: PNG with
// color type RGB and bit depth 8, or uncompressed 24-bit BMP. Anything
// else is rejected with a hint to run `frogsteg convert`.

/// Throws IoError for unreadable/corrupt data and ValidationError for
/// unsupported but well-formed inputs (JPEG, palette, gray, alpha, 16-bit).
RasterImage decodeImage(std::span<const std::uint8_t> bytes);
/// Accepts any PNG (expanded to 8-bit RGB, alpha dropped) and 24/32-bit BMP.
RasterImage decodeImageLenient(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encodePng(const ImageView& image);
std::vector<std::uint8_t> encodeBmp(const ImageView& image);

RasterImage loadCover(const std::filesystem::path& path);
RasterImage loadForConversion(const std::filesystem::path& path);
/// Format chosen by extension (.png or .bmp).
void saveImage(const ImageView& image, const std::filesystem::path& path);

/// Position of flattened sample k: pixel k/3 (row-major), channel k%3 (R,G,B).
struct SampleLocation {
  std::uint64_t pixel = 0;
  int x = 0;
  int y = 0;
  int channel = 0;

  friend bool operator==(const SampleLocation&, const SampleLocation&) = default;
};

SampleLocation locateSample(const ImageView& image, std::uint64_t sampleIndex);
std::uint64_t flattenIndex(const ImageView& image, int x, int y, int channel);

// Payload files are embedded byte for byte; WAV is only sniffed.

enum class AudioFormat { Wav, Opaque };

struct AudioPayload {
  std::vector<std::uint8_t> rawBytes;
  AudioFormat declaredFormat = AudioFormat::Opaque;
  /// Set when a .wav path lacks the RIFF/WAVE magic.
  std::string warning;
};

bool hasWavMagic(std::span<const std::uint8_t> bytes);
AudioPayload loadAudio(const std::filesystem::path& path);
void saveAudio(const AudioPayload& payload, const std::filesystem::path& path);

}  // namespace frogsteg::media
