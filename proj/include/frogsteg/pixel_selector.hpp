#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frogsteg/image.hpp"
#include "frogsteg/metrics.hpp"
#include "frogsteg/sfla.hpp"

namespace frogsteg {

/// Full-cycle modular traversal of the flattened sample space: the k-th
/// index is (offset + k*stride) mod total. With gcd(stride, total) = 1 the
/// first `total` indices form a permutation.
struct PixelSequence {
  std::uint64_t offset = 0;
  std::uint64_t stride = 1;
  std::uint64_t total = 0;

  void validate() const;
  std::uint64_t at(std::uint64_t k) const;
  std::vector<std::uint64_t> take(std::uint64_t count) const;

  /// Calls fn(index) for the first `count` positions without materializing them.
  template <typename Fn>
  void forEach(std::uint64_t count, Fn&& fn) const {
    std::uint64_t index = offset;
    for (std::uint64_t k = 0; k < count; ++k) {
      fn(index);
      index += stride;
      if (index >= total) index -= total;
    }
  }

  friend bool operator==(const PixelSequence&, const PixelSequence&) = default;
};

/// Offset 0, stride 1: plain sequential LSB embedding.
PixelSequence sequentialSequence(std::uint64_t total);

/// offset = floor(g0*N); stride = smallest s >= max(1, floor(g1*N)) coprime
/// with N, wrapping to 1 past N-1.
PixelSequence genesToSequence(std::span<const double> genes, std::uint64_t total);

struct SelectorConfig {
  sfla::Params sfla{};
  metrics::FitnessConfig fitness{};
  /// Samples perturbed while scoring a candidate; floor(N/8) when unset.
  std::optional<std::uint64_t> evalLength;

  std::uint64_t resolvedEvalLength(std::uint64_t total) const;
};

/// Scores traversals against the LSB-cleared image R: the candidate T is R
/// with the LSB set at the first evalLength positions. Since R only depends
/// on the upper seven bits, a cover and any stego made from it score
/// identically.
class SequenceScorer {
 public:
  SequenceScorer(const ImageView& image, const SelectorConfig& cfg);

  double score(const PixelSequence& seq);
  std::uint64_t sampleCount() const { return total_; }
  std::uint64_t evalLength() const { return evalLength_; }
  const RasterImage& clearedImage() const { return cleared_; }

 private:
  RasterImage cleared_;
  std::uint64_t total_ = 0;
  std::uint64_t evalLength_ = 0;
  metrics::FitnessAccumulator accumulator_;
};

RasterImage clearLsbPlane(const ImageView& image);

double sequenceFitness(const ImageView& image, const PixelSequence& seq, const SelectorConfig& cfg);

struct Selection {
  PixelSequence sequence;
  double fitness = 0.0;
  sfla::SearchTrace trace;
};

/// Runs SFLA over 2-gene traversal encodings. Deterministic in (upper seven
/// bits of the image, cfg, seed); `seed` replaces cfg.sfla.seed.
Selection selectSequence(const ImageView& image, const SelectorConfig& cfg, std::uint64_t seed);

}  // namespace frogsteg
