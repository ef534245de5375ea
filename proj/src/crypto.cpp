#include "frogsteg/crypto.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <climits>
#include <memory>
#include <stdexcept>
#include <string>

namespace frogsteg::crypto {

namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

void check(int ok, const char* what) {
  if (ok != 1) throw std::runtime_error(std::string("OpenSSL failure: ") + what);
}

Sha256Digest taggedDigest(std::string_view passphrase, std::string_view tag) {
  std::vector<std::uint8_t> buf(passphrase.begin(), passphrase.end());
  buf.insert(buf.end(), tag.begin(), tag.end());
  return sha256(buf);
}

std::vector<std::uint8_t> runCipher(const EVP_CIPHER* cipher, const AesKey& key, const std::uint8_t* iv,
                                    std::span<const std::uint8_t> data) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::runtime_error("OpenSSL failure: cipher context allocation");
  check(EVP_EncryptInit_ex(ctx.get(), cipher, nullptr, key.data(), iv), "cipher init");
  check(EVP_CIPHER_CTX_set_padding(ctx.get(), 0), "disable padding");
  std::vector<std::uint8_t> out(data.size() + 16);
  std::size_t written = 0;
  std::size_t offset = 0;
  while (offset < data.size()) {
    const int chunk = static_cast<int>(std::min<std::size_t>(data.size() - offset, INT_MAX / 2));
    int len = 0;
    check(EVP_EncryptUpdate(ctx.get(), out.data() + written, &len, data.data() + offset, chunk), "cipher update");
    written += static_cast<std::size_t>(len);
    offset += static_cast<std::size_t>(chunk);
  }
  int len = 0;
  check(EVP_EncryptFinal_ex(ctx.get(), out.data() + written, &len), "cipher final");
  written += static_cast<std::size_t>(len);
  out.resize(written);
  return out;
}

}  // namespace

Sha256Digest sha256(std::span<const std::uint8_t> data) {
  Sha256Digest digest{};
  unsigned int len = 0;
  check(EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr), "sha256");
  return digest;
}

SecretKeyMaterial SecretKeyMaterial::derive(std::string_view passphrase) {
  SecretKeyMaterial km;
  km.passphrase.assign(passphrase.begin(), passphrase.end());
  const auto keyDigest = sha256(km.passphrase);
  std::copy_n(keyDigest.begin(), km.derivedKey.size(), km.derivedKey.begin());
  const auto nonceDigest = taggedDigest(passphrase, "nonce");
  std::copy_n(nonceDigest.begin(), km.nonce.size(), km.nonce.begin());
  const auto seedDigest = taggedDigest(passphrase, "seed");
  for (int i = 0; i < 8; ++i) km.sflaSeed = (km.sflaSeed << 8) | seedDigest[static_cast<std::size_t>(i)];
  return km;
}

std::vector<std::uint8_t> aesCtr(const AesKey& key, const CounterBlock& initialCounter,
                                 std::span<const std::uint8_t> data) {
  return runCipher(EVP_aes_128_ctr(), key, initialCounter.data(), data);
}

std::array<std::uint8_t, 16> aesEncryptBlock(const AesKey& key, std::span<const std::uint8_t, 16> block) {
  const auto out = runCipher(EVP_aes_128_ecb(), key, nullptr, block);
  std::array<std::uint8_t, 16> result{};
  std::copy_n(out.begin(), result.size(), result.begin());
  return result;
}

std::vector<std::uint8_t> encrypt(std::span<const std::uint8_t> plaintext, const SecretKeyMaterial& key) {
  CounterBlock counter{};
  std::copy(key.nonce.begin(), key.nonce.end(), counter.begin());
  return aesCtr(key.derivedKey, counter, plaintext);
}

std::vector<std::uint8_t> decrypt(std::span<const std::uint8_t> ciphertext, const SecretKeyMaterial& key) {
  return encrypt(ciphertext, key);
}

}  // namespace frogsteg::crypto
