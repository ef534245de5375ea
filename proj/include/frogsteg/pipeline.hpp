#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "frogsteg/image.hpp"
#include "frogsteg/metrics.hpp"
#include "frogsteg/pixel_selector.hpp"

// End-to-end embed (read, encrypt, select pixels, frame, 1-LSB write) and
// blind extract (select pixels again from the stego image, read, verify,
// decrypt). Both sides must use the same SelectorConfig.
namespace frogsteg {

struct EmbedResult {
  RasterImage stego;
  PixelSequence sequence;
  std::uint64_t embeddedBits = 0;
  std::uint64_t evaluations = 0;
  metrics::QualityReport quality;
};

/// Throws ValidationError when the payload exceeds capacity(cover); the
/// search is not run in that case.
EmbedResult embedPayload(const ImageView& cover, std::span<const std::uint8_t> payload, std::string_view passphrase,
                         const SelectorConfig& cfg);

std::vector<std::uint8_t> extractPayload(const ImageView& stego, std::string_view passphrase,
                                         const SelectorConfig& cfg);

/// Same framing and encryption along the plain sequential sequence; the
/// reference method for benchmarking.
EmbedResult embedSequentialBaseline(const ImageView& cover, std::span<const std::uint8_t> payload,
                                    std::string_view passphrase, const metrics::FitnessConfig& fitness);

/// 10*log10(255^2 * N / bits): the PSNR floor implied by MSE <= bits/N.
double psnrLowerBound(std::uint64_t sampleCount, std::uint64_t embeddedBits);

}  // namespace frogsteg
