#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frogsteg/image.hpp"
#include "frogsteg/pixel_selector.hpp"

namespace frogsteg {

/// Ordered bits, most-significant bit of each byte first.
class BitStream {
 public:
  BitStream() = default;
  explicit BitStream(std::vector<std::uint8_t> bits);
  static BitStream fromBytes(std::span<const std::uint8_t> bytes);

  void pushBit(std::uint8_t bit) { bits_.push_back(bit & 1u); }
  void pushBits(std::uint64_t value, int width);
  void pushBytes(std::span<const std::uint8_t> bytes);
  void append(const BitStream& other);

  std::size_t size() const { return bits_.size(); }
  std::size_t remaining() const { return bits_.size() - cursor_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  /// Sequential reads from the cursor; throw ValidationError on underrun.
  std::uint64_t readBits(int width);
  std::vector<std::uint8_t> readBytes(std::size_t count);
  std::size_t cursor() const { return cursor_; }

  /// Packs whole bytes; size() must be a multiple of 8.
  std::vector<std::uint8_t> toBytes() const;

  friend bool operator==(const BitStream& a, const BitStream& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t cursor_ = 0;
};

// 88-bit wire header: magic(16) version(8) length(32 BE) crc32(32 BE).
inline constexpr std::uint16_t kHeaderMagic = 0x5346;
inline constexpr std::uint8_t kHeaderVersion = 0x01;
inline constexpr std::size_t kHeaderBits = 88;
inline constexpr std::size_t kHeaderBytes = kHeaderBits / 8;

struct PayloadHeader {
  std::uint16_t magic = kHeaderMagic;
  std::uint8_t version = kHeaderVersion;
  std::uint32_t length = 0;
  std::uint32_t crc32 = 0;

  friend bool operator==(const PayloadHeader&, const PayloadHeader&) = default;
};

/// Standard reflected CRC-32 (polynomial 0xEDB88320).
std::uint32_t crc32(std::span<const std::uint8_t> data);

std::array<std::uint8_t, kHeaderBytes> serializeHeader(const PayloadHeader& header);
/// Reads 88 bits from the stream cursor. Throws IntegrityError on a bad
/// magic or unsupported version, ValidationError if fewer than 88 bits remain.
PayloadHeader parseHeader(BitStream& bits);

/// Payload bytes an image can carry after the header: floor((N - 88) / 8).
std::uint64_t capacity(const ImageView& image);
std::uint64_t capacityForSamples(std::uint64_t sampleCount);

/// Writes bit k into the LSB of the k-th sequence sample. Throws
/// ValidationError (naming required vs available) when the stream is longer
/// than the image.
RasterImage embedBits(const ImageView& cover, const PixelSequence& seq, const BitStream& bits);
BitStream extractBits(const ImageView& stego, const PixelSequence& seq, std::size_t count);

/// Header followed by the ciphertext bits.
BitStream framePayload(std::span<const std::uint8_t> ciphertext);
/// Reads and checks header and body along `seq`. Throws IntegrityError for
/// bad magic/version, impossible length, or CRC mismatch.
std::vector<std::uint8_t> unframePayload(const ImageView& stego, const PixelSequence& seq);

}  // namespace frogsteg
