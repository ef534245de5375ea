#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "frogsteg/pixel_selector.hpp"

namespace frogsteg {

inline constexpr const char* kToolVersion = "1.0.0";

/// Reproducibility record of one embed run, stored as flat `key = value`
/// lines. Parameters are written with round-trip precision; measured
/// values with six decimals.
struct RunManifest {
  std::string toolVersion = kToolVersion;
  SelectorConfig selector;
  std::uint64_t evalLength = 0;
  int imageWidth = 0;
  int imageHeight = 0;
  std::uint64_t payloadBytes = 0;
  double elapsedMs = 0.0;
  double psnr = 0.0;
  double ssim = 0.0;
  double fitness = 0.0;

  std::string serialize() const;
  /// Unknown keys are ignored; malformed values throw ValidationError.
  static RunManifest parse(const std::string& text);

  void save(const std::filesystem::path& path) const;
  static RunManifest load(const std::filesystem::path& path);
};

std::map<std::string, std::string> parseKeyValues(const std::string& text);

}  // namespace frogsteg
