#include "frogsteg/manifest.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "frogsteg/errors.hpp"
#include "frogsteg/media_io.hpp"

namespace frogsteg {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

template <typename T>
T parseNumber(const std::map<std::string, std::string>& kv, const std::string& key, T fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  T value{};
  const auto& text = it->second;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ValidationError("manifest: malformed value for " + key + ": '" + text + "'");
  }
  return value;
}

}  // namespace

std::map<std::string, std::string> parseKeyValues(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ValidationError("manifest: expected key = value, got '" + body + "'");
    kv[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
  }
  return kv;
}

std::string RunManifest::serialize() const {
  const auto& s = selector.sfla;
  const auto& f = selector.fitness;
  std::ostringstream out;
  out << "# frogsteg run manifest\n"
      << "tool_version = " << toolVersion << '\n'
      << "sfla.frogs = " << s.frogCount << '\n'
      << "sfla.memeplexes = " << s.memeplexCount << '\n'
      << "sfla.frogs_per_memeplex = " << s.frogsPerMemeplex << '\n'
      << "sfla.submemeplex = " << s.submemeplexSize << '\n'
      << "sfla.local_iterations = " << s.localIterations << '\n'
      << "sfla.shuffles = " << s.maxShuffles << '\n'
      << "fitness.alpha = " << exact(f.alpha) << '\n'
      << "fitness.psnr_cap = " << exact(f.psnrCap) << '\n'
      << "fitness.ssim_c1 = " << exact(f.ssimC1) << '\n'
      << "fitness.ssim_c2 = " << exact(f.ssimC2) << '\n'
      << "fitness.window = " << f.windowSize << '\n'
      << "eval_length = " << evalLength << '\n'
      << "image.width = " << imageWidth << '\n'
      << "image.height = " << imageHeight << '\n'
      << "payload.bytes = " << payloadBytes << '\n'
      << "elapsed_ms = " << fixed6(elapsedMs) << '\n'
      << "psnr = " << fixed6(psnr) << '\n'
      << "ssim = " << fixed6(ssim) << '\n'
      << "z = " << fixed6(fitness) << '\n';
  return out.str();
}

RunManifest RunManifest::parse(const std::string& text) {
  const auto kv = parseKeyValues(text);
  RunManifest m;
  if (const auto it = kv.find("tool_version"); it != kv.end()) m.toolVersion = it->second;
  auto& s = m.selector.sfla;
  s.frogCount = parseNumber<std::size_t>(kv, "sfla.frogs", s.frogCount);
  s.memeplexCount = parseNumber<std::size_t>(kv, "sfla.memeplexes", s.memeplexCount);
  s.frogsPerMemeplex = parseNumber<std::size_t>(kv, "sfla.frogs_per_memeplex", s.frogsPerMemeplex);
  s.submemeplexSize = parseNumber<std::size_t>(kv, "sfla.submemeplex", s.submemeplexSize);
  s.localIterations = parseNumber<std::size_t>(kv, "sfla.local_iterations", s.localIterations);
  s.maxShuffles = parseNumber<std::size_t>(kv, "sfla.shuffles", s.maxShuffles);
  auto& f = m.selector.fitness;
  f.alpha = parseNumber<double>(kv, "fitness.alpha", f.alpha);
  f.psnrCap = parseNumber<double>(kv, "fitness.psnr_cap", f.psnrCap);
  f.ssimC1 = parseNumber<double>(kv, "fitness.ssim_c1", f.ssimC1);
  f.ssimC2 = parseNumber<double>(kv, "fitness.ssim_c2", f.ssimC2);
  f.windowSize = parseNumber<int>(kv, "fitness.window", f.windowSize);
  if (kv.count("eval_length")) {
    m.evalLength = parseNumber<std::uint64_t>(kv, "eval_length", 0);
    m.selector.evalLength = m.evalLength;
  }
  m.imageWidth = parseNumber<int>(kv, "image.width", 0);
  m.imageHeight = parseNumber<int>(kv, "image.height", 0);
  m.payloadBytes = parseNumber<std::uint64_t>(kv, "payload.bytes", 0);
  m.elapsedMs = parseNumber<double>(kv, "elapsed_ms", 0.0);
  m.psnr = parseNumber<double>(kv, "psnr", 0.0);
  m.ssim = parseNumber<double>(kv, "ssim", 0.0);
  m.fitness = parseNumber<double>(kv, "z", 0.0);
  return m;
}

void RunManifest::save(const std::filesystem::path& path) const {
  const auto text = serialize();
  media::writeFile(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

RunManifest RunManifest::load(const std::filesystem::path& path) {
  const auto bytes = media::readFile(path);
  return parse(std::string(bytes.begin(), bytes.end()));
}

}  // namespace frogsteg
