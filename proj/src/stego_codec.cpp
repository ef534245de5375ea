#include "frogsteg/stego_codec.hpp"

#include <zlib.h>

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "frogsteg/errors.hpp"

namespace frogsteg {

BitStream::BitStream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b &= 1u;
}

BitStream BitStream::fromBytes(std::span<const std::uint8_t> bytes) {
  BitStream s;
  s.pushBytes(bytes);
  return s;
}

void BitStream::pushBits(std::uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i) bits_.push_back(static_cast<std::uint8_t>((value >> i) & 1u));
}

void BitStream::pushBytes(std::span<const std::uint8_t> bytes) {
  bits_.reserve(bits_.size() + bytes.size() * 8);
  for (const auto byte : bytes) pushBits(byte, 8);
}

void BitStream::append(const BitStream& other) { bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end()); }

std::uint64_t BitStream::readBits(int width) {
  if (static_cast<std::size_t>(width) > remaining()) {
    throw ValidationError("bit stream underrun: need " + std::to_string(width) + " bits, have " +
                          std::to_string(remaining()));
  }
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value = (value << 1) | bits_[cursor_++];
  return value;
}

std::vector<std::uint8_t> BitStream::readBytes(std::size_t count) {
  if (count > remaining() / 8) throw ValidationError("bit stream underrun while reading bytes");
  std::vector<std::uint8_t> out(count);
  for (auto& byte : out) byte = static_cast<std::uint8_t>(readBits(8));
  return out;
}

std::vector<std::uint8_t> BitStream::toBytes() const {
  if (bits_.size() % 8 != 0) throw ValidationError("bit stream is not byte aligned");
  std::vector<std::uint8_t> out(bits_.size() / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | bits_[i]);
  return out;
}

std::uint32_t crc32(std::span<const std::uint8_t> data) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  std::size_t offset = 0;
  while (offset < data.size()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(data.size() - offset, std::numeric_limits<uInt>::max()));
    crc = ::crc32(crc, data.data() + offset, chunk);
    offset += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

std::array<std::uint8_t, kHeaderBytes> serializeHeader(const PayloadHeader& h) {
  return {static_cast<std::uint8_t>(h.magic >> 8), static_cast<std::uint8_t>(h.magic),
          h.version,
          static_cast<std::uint8_t>(h.length >> 24), static_cast<std::uint8_t>(h.length >> 16),
          static_cast<std::uint8_t>(h.length >> 8), static_cast<std::uint8_t>(h.length),
          static_cast<std::uint8_t>(h.crc32 >> 24), static_cast<std::uint8_t>(h.crc32 >> 16),
          static_cast<std::uint8_t>(h.crc32 >> 8), static_cast<std::uint8_t>(h.crc32)};
}

PayloadHeader parseHeader(BitStream& bits) {
  if (bits.remaining() < kHeaderBits) throw ValidationError("fewer than 88 bits available for the header");
  PayloadHeader h;
  h.magic = static_cast<std::uint16_t>(bits.readBits(16));
  h.version = static_cast<std::uint8_t>(bits.readBits(8));
  h.length = static_cast<std::uint32_t>(bits.readBits(32));
  h.crc32 = static_cast<std::uint32_t>(bits.readBits(32));
  if (h.magic != kHeaderMagic) throw IntegrityError("not a frogsteg image / wrong key (bad header magic)");
  if (h.version != kHeaderVersion) {
    throw IntegrityError("unsupported stego format version " + std::to_string(h.version));
  }
  return h;
}

std::uint64_t capacityForSamples(std::uint64_t sampleCount) {
  return sampleCount < kHeaderBits ? 0 : (sampleCount - kHeaderBits) / 8;
}

std::uint64_t capacity(const ImageView& image) { return capacityForSamples(image.sampleCount()); }

RasterImage embedBits(const ImageView& cover, const PixelSequence& seq, const BitStream& bits) {
  cover.validate();
  if (seq.total != cover.sampleCount()) throw ValidationError("pixel sequence does not match the cover size");
  if (bits.size() > cover.sampleCount()) {
    throw ValidationError("payload needs " + std::to_string(bits.size()) + " bits but the cover has only " +
                          std::to_string(cover.sampleCount()) + " samples");
  }
  seq.validate();
  std::vector<std::uint8_t> out(cover.samples.begin(), cover.samples.end());
  std::size_t k = 0;
  seq.forEach(bits.size(), [&](std::uint64_t index) {
    out[index] = static_cast<std::uint8_t>((out[index] & 0xFE) | bits[k++]);
  });
  return RasterImage(cover.width, cover.height, std::move(out));
}

BitStream extractBits(const ImageView& stego, const PixelSequence& seq, std::size_t count) {
  stego.validate();
  if (seq.total != stego.sampleCount()) throw ValidationError("pixel sequence does not match the image size");
  if (count > stego.sampleCount()) {
    throw ValidationError("cannot read " + std::to_string(count) + " bits from " +
                          std::to_string(stego.sampleCount()) + " samples");
  }
  seq.validate();
  std::vector<std::uint8_t> bits;
  bits.reserve(count);
  seq.forEach(count, [&](std::uint64_t index) { bits.push_back(stego.samples[index] & 1u); });
  return BitStream(std::move(bits));
}

BitStream framePayload(std::span<const std::uint8_t> ciphertext) {
  if (ciphertext.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw ValidationError("payload too large for the 32-bit length field");
  }
  PayloadHeader h;
  h.length = static_cast<std::uint32_t>(ciphertext.size());
  h.crc32 = crc32(ciphertext);
  const auto header = serializeHeader(h);
  BitStream bits = BitStream::fromBytes(header);
  bits.pushBytes(ciphertext);
  return bits;
}

std::vector<std::uint8_t> unframePayload(const ImageView& stego, const PixelSequence& seq) {
  if (stego.sampleCount() < kHeaderBits) throw IntegrityError("image too small to hold a stego header");
  BitStream headerBits = extractBits(stego, seq, kHeaderBits);
  const PayloadHeader h = parseHeader(headerBits);
  if (h.length > capacity(stego)) {
    std::ostringstream msg;
    msg << "header declares " << h.length << " bytes but the image holds at most " << capacity(stego)
        << " (wrong key or parameters)";
    throw IntegrityError(msg.str());
  }
  BitStream all = extractBits(stego, seq, kHeaderBits + static_cast<std::size_t>(h.length) * 8);
  parseHeader(all);
  auto body = all.readBytes(h.length);
  if (crc32(body) != h.crc32) throw IntegrityError("CRC mismatch: corrupted stego image or wrong parameters");
  return body;
}

}  // namespace frogsteg
