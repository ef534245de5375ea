#include "frogsteg/pixel_selector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "frogsteg/errors.hpp"

namespace frogsteg {

namespace {

std::uint64_t scaledIndex(double gene, std::uint64_t total) {
  const double scaled = std::floor(gene * static_cast<double>(total));
  if (!(scaled >= 0.0)) return 0;
  const auto index = static_cast<std::uint64_t>(scaled);
  return index >= total ? total - 1 : index;
}

}  // namespace

void PixelSequence::validate() const {
  if (total < 1) throw ValidationError("pixel sequence over an empty sample space");
  if (offset >= total) throw ValidationError("pixel sequence offset out of range");
  if (total == 1) {
    if (stride != 1) throw ValidationError("pixel sequence stride out of range");
    return;
  }
  if (stride < 1 || stride >= total) throw ValidationError("pixel sequence stride out of range");
  if (std::gcd(stride, total) != 1) throw ValidationError("pixel sequence stride not coprime with sample count");
}

std::uint64_t PixelSequence::at(std::uint64_t k) const {
  const unsigned __int128 position = static_cast<unsigned __int128>(k % total) * stride + offset;
  return static_cast<std::uint64_t>(position % total);
}

std::vector<std::uint64_t> PixelSequence::take(std::uint64_t count) const {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  forEach(count, [&](std::uint64_t index) { out.push_back(index); });
  return out;
}

PixelSequence sequentialSequence(std::uint64_t total) { return {0, 1, total}; }

PixelSequence genesToSequence(std::span<const double> genes, std::uint64_t total) {
  if (genes.size() < 2) throw ValidationError("traversal encoding needs two genes");
  if (total < 2) throw ValidationError("traversal needs at least two samples");
  PixelSequence seq;
  seq.total = total;
  seq.offset = scaledIndex(genes[0], total);
  std::uint64_t stride = std::max<std::uint64_t>(1, scaledIndex(genes[1], total));
  while (stride < total && std::gcd(stride, total) != 1) ++stride;
  seq.stride = stride < total ? stride : 1;
  return seq;
}

std::uint64_t SelectorConfig::resolvedEvalLength(std::uint64_t total) const {
  const std::uint64_t length = evalLength.value_or(total / 8);
  if (length > total) {
    throw ValidationError("evaluation length " + std::to_string(length) + " exceeds " + std::to_string(total) +
                          " samples");
  }
  return length;
}

RasterImage clearLsbPlane(const ImageView& image) {
  image.validate();
  std::vector<std::uint8_t> samples(image.samples.begin(), image.samples.end());
  for (auto& s : samples) s &= 0xFE;
  return RasterImage(image.width, image.height, std::move(samples));
}

SequenceScorer::SequenceScorer(const ImageView& image, const SelectorConfig& cfg)
    : cleared_(clearLsbPlane(image)),
      total_(image.sampleCount()),
      evalLength_(cfg.resolvedEvalLength(image.sampleCount())),
      accumulator_(cleared_.view(), cfg.fitness) {}

double SequenceScorer::score(const PixelSequence& seq) {
  if (seq.total != total_) throw ValidationError("pixel sequence does not match the image size");
  accumulator_.reset();
  seq.forEach(evalLength_, [&](std::uint64_t index) { accumulator_.flip(index); });
  return accumulator_.score();
}

double sequenceFitness(const ImageView& image, const PixelSequence& seq, const SelectorConfig& cfg) {
  SequenceScorer scorer(image, cfg);
  return scorer.score(seq);
}

Selection selectSequence(const ImageView& image, const SelectorConfig& cfg, std::uint64_t seed) {
  image.validate();
  if (image.empty()) throw ValidationError("cannot select pixels in an empty image");
  sfla::Params params = cfg.sfla;
  params.seed = seed;
  params.geneDim = 2;
  params.validate();

  SequenceScorer scorer(image, cfg);
  const std::uint64_t total = scorer.sampleCount();
  const auto result = sfla::runSfla(params, [&](std::span<const double> genes) {
    return scorer.score(genesToSequence(genes, total));
  });

  Selection selection;
  selection.sequence = genesToSequence(result.best.genes, total);
  selection.fitness = result.best.fitness;
  selection.trace = result.trace;
  return selection;
}

}  // namespace frogsteg
