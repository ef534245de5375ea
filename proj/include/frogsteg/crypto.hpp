#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Length-preserving payload encryption and key-derived search seeds.
//
// Keys, nonces and seeds all come from single-pass SHA-256 of the
// passphrase, with no salt: extraction has nothing but the passphrase to
// work from. The nonce is therefore fixed per passphrase, so reusing one
// passphrase for different payloads leaks the XOR of the plaintexts.
namespace frogsteg::crypto {

using Sha256Digest = std::array<std::uint8_t, 32>;
using AesKey = std::array<std::uint8_t, 16>;
using CounterBlock = std::array<std::uint8_t, 16>;

Sha256Digest sha256(std::span<const std::uint8_t> data);

struct SecretKeyMaterial {
  std::vector<std::uint8_t> passphrase;
  AesKey derivedKey{};                 ///< SHA-256(passphrase)[0..16)
  std::array<std::uint8_t, 12> nonce{};  ///< SHA-256(passphrase || "nonce")[0..12)
  std::uint64_t sflaSeed = 0;          ///< SHA-256(passphrase || "seed")[0..8), big-endian

  static SecretKeyMaterial derive(std::string_view passphrase);
};

/// AES-128-CTR keystream XOR. The 128-bit counter block increments as a
/// big-endian integer.
std::vector<std::uint8_t> aesCtr(const AesKey& key, const CounterBlock& initialCounter,
                                 std::span<const std::uint8_t> data);

/// Single-block AES-128 encryption (ECB core).
std::array<std::uint8_t, 16> aesEncryptBlock(const AesKey& key, std::span<const std::uint8_t, 16> block);

/// AES-128-CTR with counter block nonce || 00000000.
std::vector<std::uint8_t> encrypt(std::span<const std::uint8_t> plaintext, const SecretKeyMaterial& key);
std::vector<std::uint8_t> decrypt(std::span<const std::uint8_t> ciphertext, const SecretKeyMaterial& key);

}  // namespace frogsteg::crypto
