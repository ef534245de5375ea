#include "frogsteg/pipeline.hpp"

#include <cmath>
#include <string>

#include "frogsteg/crypto.hpp"
#include "frogsteg/errors.hpp"
#include "frogsteg/stego_codec.hpp"

namespace frogsteg {

namespace {

void requireCapacity(const ImageView& cover, std::size_t payloadBytes) {
  cover.validate();
  const std::uint64_t available = capacity(cover);
  if (payloadBytes > available) {
    throw ValidationError("payload of " + std::to_string(payloadBytes) + " bytes exceeds capacity: required " +
                          std::to_string(payloadBytes) + " bytes, available " + std::to_string(available) +
                          " bytes");
  }
}

EmbedResult writeAlong(const ImageView& cover, const PixelSequence& seq, std::span<const std::uint8_t> payload,
                       const crypto::SecretKeyMaterial& key, const metrics::FitnessConfig& fitness) {
  const auto ciphertext = crypto::encrypt(payload, key);
  const BitStream bits = framePayload(ciphertext);
  EmbedResult result;
  result.stego = embedBits(cover, seq, bits);
  result.sequence = seq;
  result.embeddedBits = bits.size();
  result.quality = metrics::evaluateQuality(result.stego.view(), cover, fitness);
  return result;
}

}  // namespace

EmbedResult embedPayload(const ImageView& cover, std::span<const std::uint8_t> payload, std::string_view passphrase,
                         const SelectorConfig& cfg) {
  requireCapacity(cover, payload.size());
  const auto key = crypto::SecretKeyMaterial::derive(passphrase);
  const Selection selection = selectSequence(cover, cfg, key.sflaSeed);
  EmbedResult result = writeAlong(cover, selection.sequence, payload, key, cfg.fitness);
  result.evaluations = selection.trace.evaluations;
  return result;
}

std::vector<std::uint8_t> extractPayload(const ImageView& stego, std::string_view passphrase,
                                         const SelectorConfig& cfg) {
  stego.validate();
  if (stego.sampleCount() < kHeaderBits) throw IntegrityError("image too small to hold a stego header");
  const auto key = crypto::SecretKeyMaterial::derive(passphrase);
  const Selection selection = selectSequence(stego, cfg, key.sflaSeed);
  const auto ciphertext = unframePayload(stego, selection.sequence);
  return crypto::decrypt(ciphertext, key);
}

EmbedResult embedSequentialBaseline(const ImageView& cover, std::span<const std::uint8_t> payload,
                                    std::string_view passphrase, const metrics::FitnessConfig& fitness) {
  requireCapacity(cover, payload.size());
  const auto key = crypto::SecretKeyMaterial::derive(passphrase);
  return writeAlong(cover, sequentialSequence(cover.sampleCount()), payload, key, fitness);
}

double psnrLowerBound(std::uint64_t sampleCount, std::uint64_t embeddedBits) {
  if (embeddedBits == 0) return INFINITY;
  return 10.0 * std::log10(kMaxSampleValue * kMaxSampleValue * static_cast<double>(sampleCount) /
                           static_cast<double>(embeddedBits));
}

}  // namespace frogsteg
