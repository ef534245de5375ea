#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frogsteg/cli.hpp"
#include "frogsteg/manifest.hpp"
#include "frogsteg/media_io.hpp"
#include "frogsteg/metrics.hpp"
#include "frogsteg/textures.hpp"
#include "temp_dir.hpp"

using namespace frogsteg;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "frogsteg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string valueOf(const std::string& text, const std::string& key) {
  const auto kv = parseKeyValues(text);
  const auto it = kv.find(key);
  return it == kv.end() ? std::string{} : it->second;
}

}  // namespace

TEST_CASE("embed, extract and metrics through the CLI") {
  TempDir dir;
  const auto cover = textures::generate(64, 48, 3);
  media::saveImage(cover, dir / "cover.png");
  const auto wav = media::readFile(testData("tone.wav"));

  auto r = runCli({"embed", "--cover", (dir / "cover.png").string(), "--audio", testData("tone.wav").string(),
                   "--key", "s3cret", "--out", (dir / "stego.png").string(), "--manifest",
                   (dir / "run.manifest").string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(valueOf(r.out, "payload_bytes") == std::to_string(wav.size()));
  CHECK(valueOf(r.out, "psnr").find('.') != std::string::npos);
  CHECK(valueOf(r.out, "psnr").size() - valueOf(r.out, "psnr").find('.') == 7);

  r = runCli({"extract", "--stego", (dir / "stego.png").string(), "--key", "s3cret", "--out",
              (dir / "out.wav").string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(media::readFile(dir / "out.wav") == wav);
  CHECK(valueOf(r.out, "format") == "wav");

  // Extraction driven by the manifest reproduces the same parameters.
  r = runCli({"extract", "--stego", (dir / "stego.png").string(), "--key", "s3cret", "--out",
              (dir / "out2.wav").string(), "--params", (dir / "run.manifest").string()});
  REQUIRE(r.code == 0);
  CHECK(media::readFile(dir / "out2.wav") == wav);

  r = runCli({"extract", "--stego", (dir / "stego.png").string(), "--key", "wrong", "--out",
              (dir / "bad.wav").string()});
  CHECK(r.code == 3);

  r = runCli({"metrics", "--a", (dir / "cover.png").string(), "--b", (dir / "cover.png").string()});
  REQUIRE(r.code == 0);
  CHECK(valueOf(r.out, "mse") == "0.000000");
  CHECK(valueOf(r.out, "ssim") == "1.000000");
  CHECK(valueOf(r.out, "psnr") == "100.000000");
  CHECK(valueOf(r.out, "z") == "1.000000");
  CHECK(valueOf(r.out, "uqi") == "1.000000");

  r = runCli({"metrics", "--a", (dir / "cover.png").string(), "--b", (dir / "stego.png").string()});
  REQUIRE(r.code == 0);
  const auto stego = media::loadCover(dir / "stego.png");
  metrics::FitnessConfig cfg;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", metrics::psnr(cover, stego, cfg));
  CHECK(valueOf(r.out, "psnr") == buf);
  std::snprintf(buf, sizeof buf, "%.6f", metrics::ssim(cover, stego, cfg));
  CHECK(valueOf(r.out, "ssim") == buf);
}

TEST_CASE("parameter overrides must match between embed and extract") {
  TempDir dir;
  media::saveImage(textures::generate(48, 48, 8), dir / "cover.png");
  media::writeFile(dir / "p.bin", std::vector<std::uint8_t>(200, 7));
  auto r = runCli({"embed", "--cover", (dir / "cover.png").string(), "--audio", (dir / "p.bin").string(), "--key",
                   "k", "--out", (dir / "stego.bmp").string(), "--sfla-shuffles", "3", "--eval-length", "500"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  r = runCli({"extract", "--stego", (dir / "stego.bmp").string(), "--key", "k", "--out", (dir / "x.bin").string(),
              "--sfla-shuffles", "3", "--eval-length", "500"});
  REQUIRE(r.code == 0);
  CHECK(media::readFile(dir / "x.bin") == std::vector<std::uint8_t>(200, 7));
}

TEST_CASE("CLI exit codes") {
  TempDir dir;
  media::saveImage(textures::generate(16, 16, 1), dir / "small.png");
  media::writeFile(dir / "big.bin", std::vector<std::uint8_t>(200, 1));

  SUBCASE("capacity exceeded writes nothing") {
    auto r = runCli({"embed", "--cover", (dir / "small.png").string(), "--audio", (dir / "big.bin").string(),
                     "--key", "k", "--out", (dir / "o.png").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("required 200") != std::string::npos);
    CHECK(r.err.find("available 85") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir / "o.png"));
  }
  SUBCASE("missing input") {
    auto r = runCli({"embed", "--cover", (dir / "none.png").string(), "--audio", (dir / "big.bin").string(),
                     "--key", "k", "--out", (dir / "o.png").string()});
    CHECK(r.code == 1);
  }
  SUBCASE("truncated stego") {
    const auto bytes = media::readFile(dir / "small.png");
    media::writeFile(dir / "cut.png", std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 40));
    auto r = runCli({"extract", "--stego", (dir / "cut.png").string(), "--key", "k", "--out",
                     (dir / "o.bin").string()});
    CHECK(r.code == 1);
  }
  SUBCASE("not a stego image") {
    auto r = runCli({"extract", "--stego", (dir / "small.png").string(), "--key", "k", "--out",
                     (dir / "o.bin").string()});
    CHECK(r.code == 3);
    CHECK(r.err.find("wrong key") != std::string::npos);
  }
  SUBCASE("metrics dimension mismatch") {
    media::saveImage(textures::generate(16, 17, 1), dir / "other.png");
    auto r = runCli({"metrics", "--a", (dir / "small.png").string(), "--b", (dir / "other.png").string()});
    CHECK(r.code == 2);
  }
  SUBCASE("bad flags") {
    CHECK(runCli({"embed"}).code == 2);
    CHECK(runCli({"frobnicate"}).code == 2);
    CHECK(runCli({"embed", "--cover", "a", "--audio", "b", "--key", "k", "--out", "c.png", "--sfla-frogs", "31"})
              .code == 2);
  }
  SUBCASE("bench with an empty corpus") {
    std::filesystem::create_directories(dir / "empty");
    auto r = runCli({"bench", "--covers", (dir / "empty").string(), "--payload-bytes", "10", "--key", "k", "--out",
                     (dir / "b.csv").string()});
    CHECK(r.code == 2);
  }
}

TEST_CASE("bench emits one row per cover, size and method") {
  TempDir dir;
  auto r = runCli({"textures", "--out", (dir / "corpus").string(), "--count", "5", "--size", "32", "--seed", "4"});
  REQUIRE(r.code == 0);
  r = runCli({"bench", "--covers", (dir / "corpus").string(), "--payload-bytes", "16,64", "--key", "k", "--out",
              (dir / "bench.csv").string(), "--sfla-shuffles", "4"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  std::ifstream csv(dir / "bench.csv");
  std::string line;
  std::getline(csv, line);
  CHECK(line == "image,payload,method,mse,psnr,ssim,z,evaluations,milliseconds");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 20);
  CHECK(valueOf(r.out, "rows") == "20");
}

TEST_CASE("convert strips alpha") {
  TempDir dir;
  auto r = runCli({"convert", "--in", testData("rgba_2x2.png").string(), "--out", (dir / "rgb.png").string()});
  REQUIRE(r.code == 0);
  CHECK(media::loadCover(dir / "rgb.png").at(1, 1, 2) == 56);
}
