#include "frogsteg/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frogsteg/crypto.hpp"
#include "frogsteg/errors.hpp"
#include "frogsteg/manifest.hpp"
#include "frogsteg/media_io.hpp"
#include "frogsteg/metrics.hpp"
#include "frogsteg/pipeline.hpp"
#include "frogsteg/sfla.hpp"
#include "frogsteg/stego_codec.hpp"
#include "frogsteg/textures.hpp"

namespace fs = std::filesystem;

namespace frogsteg::cli {

namespace {

using Clock = std::chrono::steady_clock;

double millisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Parameter flags shared by embed, extract and bench. Anything changed at
// embed time must be repeated at extract time.
struct ParamOptions {
  std::string paramsFile;
  std::optional<std::size_t> frogs;
  std::optional<std::size_t> memeplexes;
  std::optional<std::size_t> frogsPerMemeplex;
  std::optional<std::size_t> submemeplex;
  std::optional<std::size_t> localIterations;
  std::optional<std::size_t> shuffles;
  std::optional<std::uint64_t> evalLength;
  std::optional<double> alpha;
  std::optional<int> window;

  void attach(CLI::App* app) {
    app->add_option("--params", paramsFile, "Read SFLA/fitness parameters from a run manifest");
    app->add_option("--sfla-frogs", frogs, "Population size F (must equal m x eta)");
    app->add_option("--sfla-memeplexes", memeplexes, "Memeplex count m");
    app->add_option("--sfla-frogs-per-memeplex", frogsPerMemeplex, "Frogs per memeplex eta");
    app->add_option("--sfla-submemeplex", submemeplex, "Submemeplex size q");
    app->add_option("--sfla-local-iterations", localIterations, "Improvement steps per memeplex per shuffle");
    app->add_option("--sfla-shuffles", shuffles, "Shuffle cycles");
    app->add_option("--eval-length", evalLength, "Samples perturbed when scoring a sequence (default N/8)");
    app->add_option("--alpha", alpha, "SSIM weight in the fitness (default 0.5)");
    app->add_option("--window", window, "SSIM window size (default 8)");
  }

  SelectorConfig resolve() const {
    SelectorConfig cfg;
    if (!paramsFile.empty()) cfg = RunManifest::load(paramsFile).selector;
    auto& s = cfg.sfla;
    if (memeplexes) s.memeplexCount = *memeplexes;
    if (frogsPerMemeplex) s.frogsPerMemeplex = *frogsPerMemeplex;
    s.frogCount = frogs ? *frogs : s.memeplexCount * s.frogsPerMemeplex;
    if (submemeplex) s.submemeplexSize = *submemeplex;
    if (localIterations) s.localIterations = *localIterations;
    if (shuffles) s.maxShuffles = *shuffles;
    if (evalLength) cfg.evalLength = *evalLength;
    if (alpha) cfg.fitness.alpha = *alpha;
    if (window) cfg.fitness.windowSize = *window;
    s.validate();
    cfg.fitness.validate();
    return cfg;
  }
};

void requireImageExtension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext != ".png" && ext != ".bmp") throw ValidationError(path.string() + ": output must be .png or .bmp");
}

void printQuality(std::ostream& out, const metrics::QualityReport& q) {
  out << "mse = " << fixed6(q.mse) << '\n'
      << "psnr = " << fixed6(q.psnr) << '\n'
      << "ssim = " << fixed6(q.ssim) << '\n'
      << "z = " << fixed6(q.fitness) << '\n';
}

struct EmbedArgs {
  std::string cover, audio, key, out, manifest;
  ParamOptions params;
};

int cmdEmbed(const EmbedArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const SelectorConfig cfg = a.params.resolve();
  requireImageExtension(a.out);
  const RasterImage cover = media::loadCover(a.cover);
  const media::AudioPayload payload = media::loadAudio(a.audio);
  if (!payload.warning.empty()) err << "warning: " << payload.warning << '\n';

  const EmbedResult result = embedPayload(cover, payload.rawBytes, a.key, cfg);
  media::saveImage(result.stego, a.out);
  const double elapsed = millisSince(start);

  out << "payload_bytes = " << payload.rawBytes.size() << '\n'
      << "embedded_bits = " << result.embeddedBits << '\n'
      << "capacity_bytes = " << capacity(cover) << '\n'
      << "sequence_offset = " << result.sequence.offset << '\n'
      << "sequence_stride = " << result.sequence.stride << '\n'
      << "evaluations = " << result.evaluations << '\n';
  printQuality(out, result.quality);
  out << "elapsed_ms = " << fixed6(elapsed) << '\n';

  if (!a.manifest.empty()) {
    RunManifest m;
    m.selector = cfg;
    m.evalLength = cfg.resolvedEvalLength(cover.sampleCount());
    m.selector.evalLength = m.evalLength;
    m.imageWidth = cover.width();
    m.imageHeight = cover.height();
    m.payloadBytes = payload.rawBytes.size();
    m.elapsedMs = elapsed;
    m.psnr = result.quality.psnr;
    m.ssim = result.quality.ssim;
    m.fitness = result.quality.fitness;
    m.save(a.manifest);
  }
  return 0;
}

struct ExtractArgs {
  std::string stego, key, out;
  ParamOptions params;
};

int cmdExtract(const ExtractArgs& a, std::ostream& out, std::ostream&) {
  const SelectorConfig cfg = a.params.resolve();
  const RasterImage stego = media::loadCover(a.stego);
  media::AudioPayload payload;
  payload.rawBytes = extractPayload(stego, a.key, cfg);
  media::saveAudio(payload, a.out);
  out << "payload_bytes = " << payload.rawBytes.size() << '\n'
      << "format = " << (media::hasWavMagic(payload.rawBytes) ? "wav" : "opaque") << '\n';
  return 0;
}

struct MetricsArgs {
  std::string a, b;
  int window = 8;
};

int cmdMetrics(const MetricsArgs& args, std::ostream& out, std::ostream&) {
  const RasterImage a = media::loadCover(args.a);
  const RasterImage b = media::loadCover(args.b);
  requireSameShape(a, b);
  metrics::FitnessConfig cfg;
  cfg.windowSize = args.window;
  const auto q = metrics::evaluateQuality(a, b, cfg);
  printQuality(out, q);
  try {
    out << "uqi = " << fixed6(metrics::uqi(a, b, cfg.windowSize)) << '\n';
  } catch (const ValidationError&) {
    out << "uqi = undefined\n";
  }
  return 0;
}

struct BenchArgs {
  std::string covers, key, out;
  std::vector<std::size_t> payloadBytes;
  ParamOptions params;
};

std::vector<std::uint8_t> benchPayload(std::size_t bytes, std::uint64_t seed) {
  sfla::Rng rng(seed);
  std::vector<std::uint8_t> payload(bytes);
  for (auto& b : payload) b = static_cast<std::uint8_t>(rng.next() >> 56);
  return payload;
}

int threadCap() {
  if (const char* env = std::getenv("FROGSTEG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw ValidationError("FROGSTEG_THREADS must be a positive integer");
  }
  return omp_get_max_threads();
}

struct BenchRow {
  std::string image;
  std::size_t payload = 0;
  std::string method;
  metrics::QualityReport quality;
  std::uint64_t evaluations = 0;
  double millis = 0.0;
  double psnrBound = 0.0;
};

int cmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const SelectorConfig cfg = a.params.resolve();
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(a.covers, ec)) {
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (entry.is_regular_file() && (ext == ".png" || ext == ".bmp")) files.push_back(entry.path());
  }
  if (ec) throw IoError("cannot read cover directory " + a.covers + ": " + ec.message());
  if (files.empty()) throw ValidationError("no .png or .bmp covers in " + a.covers);
  if (a.payloadBytes.empty()) throw ValidationError("no payload sizes given");
  std::sort(files.begin(), files.end());

  std::vector<RasterImage> covers;
  for (const auto& f : files) {
    covers.push_back(media::loadCover(f));
    for (const auto size : a.payloadBytes) {
      if (size > capacity(covers.back())) {
        throw ValidationError(f.filename().string() + ": payload of " + std::to_string(size) +
                              " bytes exceeds capacity " + std::to_string(capacity(covers.back())));
      }
    }
  }

  const std::size_t jobs = covers.size() * a.payloadBytes.size();
  std::vector<BenchRow> rows(jobs * 2);
  std::vector<std::string> failures(jobs);

#pragma omp parallel for schedule(dynamic) num_threads(threadCap())
  for (std::size_t job = 0; job < jobs; ++job) {
    try {
      const std::size_t ci = job / a.payloadBytes.size();
      const std::size_t size = a.payloadBytes[job % a.payloadBytes.size()];
      const RasterImage& cover = covers[ci];
      const auto payload = benchPayload(size, job + 1);

      auto t0 = Clock::now();
      const EmbedResult baseline = embedSequentialBaseline(cover, payload, a.key, cfg.fitness);
      const double baseMs = millisSince(t0);
      t0 = Clock::now();
      const EmbedResult sfla = embedPayload(cover, payload, a.key, cfg);
      const double sflaMs = millisSince(t0);

      const std::string name = files[ci].filename().string();
      const double bound = psnrLowerBound(cover.sampleCount(), baseline.embeddedBits);
      rows[2 * job] = {name, size, "baseline", baseline.quality, 0, baseMs, bound};
      rows[2 * job + 1] = {name, size, "sfla", sfla.quality, sfla.evaluations, sflaMs, bound};
    } catch (const std::exception& e) {
      failures[job] = e.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw ValidationError("bench job failed: " + f);
  }

  std::ofstream csv(a.out, std::ios::trunc);
  if (!csv) throw IoError("cannot create " + a.out);
  csv << "image,payload,method,mse,psnr,ssim,z,evaluations,milliseconds\n";
  for (const auto& r : rows) {
    csv << r.image << ',' << r.payload << ',' << r.method << ',' << fixed6(r.quality.mse) << ','
        << fixed6(r.quality.psnr) << ',' << fixed6(r.quality.ssim) << ',' << fixed6(r.quality.fitness) << ','
        << r.evaluations << ',' << fixed6(r.millis) << '\n';
  }
  if (!csv) throw IoError("error writing " + a.out);

  std::size_t wins = 0;
  std::size_t boundViolations = 0;
  for (std::size_t job = 0; job < jobs; ++job) {
    if (rows[2 * job + 1].quality.fitness >= rows[2 * job].quality.fitness) ++wins;
    for (const auto& r : {rows[2 * job], rows[2 * job + 1]}) {
      if (r.quality.psnr < std::min(r.psnrBound, cfg.fitness.psnrCap)) ++boundViolations;
    }
  }
  if (boundViolations > 0) err << "warning: " << boundViolations << " rows below the analytic PSNR bound\n";
  out << "rows = " << rows.size() << '\n'
      << "sfla_at_least_baseline = " << wins << '\n'
      << "sfla_win_rate = " << fixed6(static_cast<double>(wins) / static_cast<double>(jobs)) << '\n';
  return 0;
}

int cmdConvert(const std::string& in, const std::string& outPath, std::ostream& out) {
  requireImageExtension(outPath);
  const RasterImage image = media::loadForConversion(in);
  media::saveImage(image, outPath);
  out << "width = " << image.width() << '\n' << "height = " << image.height() << '\n';
  return 0;
}

int cmdTextures(const std::string& dir, int count, int size, std::uint64_t seed, std::ostream& out) {
  if (count < 1 || size < 1) throw ValidationError("count and size must be positive");
  fs::create_directories(dir);
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "texture_%03d.png", i);
    media::saveImage(textures::generate(size, size, seed + static_cast<std::uint64_t>(i)), fs::path(dir) / name);
  }
  out << "generated = " << count << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"frogsteg: hide payload files in the LSB plane of lossless RGB images"};
  app.require_subcommand(1);

  EmbedArgs embed;
  auto* embedCmd = app.add_subcommand("embed", "Encrypt a payload file and hide it in a cover image");
  embedCmd->add_option("--cover", embed.cover, "Lossless cover image (PNG or 24-bit BMP)")->required();
  embedCmd->add_option("--audio", embed.audio, "Payload file (WAV or any bytes)")->required();
  embedCmd->add_option("--key", embed.key, "Secret passphrase")->required();
  embedCmd->add_option("--out", embed.out, "Stego image path (.png or .bmp)")->required();
  embedCmd->add_option("--manifest", embed.manifest, "Write a run manifest here");
  embed.params.attach(embedCmd);

  ExtractArgs extract;
  auto* extractCmd = app.add_subcommand("extract", "Recover the payload from a stego image");
  extractCmd->add_option("--stego", extract.stego, "Stego image")->required();
  extractCmd->add_option("--key", extract.key, "Secret passphrase")->required();
  extractCmd->add_option("--out", extract.out, "Recovered payload path")->required();
  extract.params.attach(extractCmd);

  MetricsArgs metricsArgs;
  auto* metricsCmd = app.add_subcommand("metrics", "Print MSE, PSNR, SSIM, UQI and Z for two images");
  metricsCmd->add_option("--a", metricsArgs.a, "First image")->required();
  metricsCmd->add_option("--b", metricsArgs.b, "Second image")->required();
  metricsCmd->add_option("--window", metricsArgs.window, "Window size for SSIM/UQI")->check(CLI::Range(2, 1 << 20));

  BenchArgs bench;
  auto* benchCmd = app.add_subcommand("bench", "Compare sequential LSB with SFLA-selected embedding");
  benchCmd->add_option("--covers", bench.covers, "Directory of cover images")->required();
  benchCmd->add_option("--payload-bytes", bench.payloadBytes, "Payload sizes in bytes")
      ->required()
      ->delimiter(',');
  benchCmd->add_option("--key", bench.key, "Secret passphrase")->required();
  benchCmd->add_option("--out", bench.out, "CSV output path")->required();
  bench.params.attach(benchCmd);

  std::string convertIn, convertOut;
  auto* convertCmd = app.add_subcommand("convert", "Convert any PNG/BMP to 8-bit RGB (drops alpha)");
  convertCmd->add_option("--in", convertIn, "Input image")->required();
  convertCmd->add_option("--out", convertOut, "Output image (.png or .bmp)")->required();

  std::string texturesDir;
  int textureCount = 20;
  int textureSize = 256;
  std::uint64_t textureSeed = 1;
  auto* texturesCmd = app.add_subcommand("textures", "Generate a synthetic cover corpus");
  texturesCmd->add_option("--out", texturesDir, "Output directory")->required();
  texturesCmd->add_option("--count", textureCount, "Number of images");
  texturesCmd->add_option("--size", textureSize, "Width and height in pixels");
  texturesCmd->add_option("--seed", textureSeed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) err << sub->help();
    return 2;
  }

  try {
    if (embedCmd->parsed()) return cmdEmbed(embed, out, err);
    if (extractCmd->parsed()) return cmdExtract(extract, out, err);
    if (metricsCmd->parsed()) return cmdMetrics(metricsArgs, out, err);
    if (benchCmd->parsed()) return cmdBench(bench, out, err);
    if (convertCmd->parsed()) return cmdConvert(convertIn, convertOut, out);
    if (texturesCmd->parsed()) return cmdTextures(texturesDir, textureCount, textureSize, textureSeed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exitCode();
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace frogsteg::cli
