#include <doctest.h>

#include "frogsteg/errors.hpp"
#include "frogsteg/media_io.hpp"
#include "frogsteg/textures.hpp"
#include "temp_dir.hpp"

using namespace frogsteg;
using namespace frogsteg::media;

namespace {
const std::vector<std::uint8_t> kFixtureSamples{255, 0, 0, 0, 255, 0, 0, 0, 255, 12, 34, 56};
}

TEST_CASE("decode fixtures written by an independent encoder") {
  const auto png = loadCover(testData("rgb_2x2.png"));
  CHECK(png.width() == 2);
  CHECK(png.height() == 2);
  CHECK(std::vector<std::uint8_t>(png.samples().begin(), png.samples().end()) == kFixtureSamples);

  const auto bmp = loadCover(testData("rgb_2x2.bmp"));
  CHECK(bmp == png);

  const auto odd = loadCover(testData("rgb_3x2.bmp"));
  CHECK(odd.width() == 3);
  CHECK(odd.at(2, 1, 2) == 18);
  CHECK(odd.at(0, 1, 0) == 10);
}

TEST_CASE("unsupported layouts are rejected with a conversion hint") {
  for (const char* name : {"rgba_2x2.png", "gray_2x2.png", "palette_2x2.png", "gray16_2x2.png"}) {
    CAPTURE(name);
    try {
      loadCover(testData(name));
      FAIL("expected rejection");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("convert") != std::string::npos);
    }
  }
}

TEST_CASE("lossy inputs are rejected") {
  try {
    loadCover(testData("rgb_2x2.jpg"));
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("lossless required") != std::string::npos);
  }
  // Content sniffing catches a JPEG with a neutral name too.
  TempDir dir;
  const auto bytes = readFile(testData("rgb_2x2.jpg"));
  writeFile(dir / "photo.img", bytes);
  CHECK_THROWS_AS(loadCover(dir / "photo.img"), ValidationError);
}

TEST_CASE("conversion drops alpha and expands other layouts") {
  const auto rgba = loadForConversion(testData("rgba_2x2.png"));
  CHECK(std::vector<std::uint8_t>(rgba.samples().begin(), rgba.samples().end()) == kFixtureSamples);
  const auto gray = loadForConversion(testData("gray_2x2.png"));
  CHECK(gray.at(1, 0, 0) == 64);
  CHECK(gray.at(1, 0, 2) == 64);
  const auto pal = loadForConversion(testData("palette_2x2.png"));
  CHECK(pal.width() == 2);
  const auto g16 = loadForConversion(testData("gray16_2x2.png"));
  CHECK(g16.at(1, 1, 0) == 255);
}

TEST_CASE("save and load are lossless for PNG and BMP") {
  TempDir dir;
  for (int trial = 0; trial < 5; ++trial) {
    const auto img = textures::randomImage(5 + trial * 3, 4 + trial, static_cast<std::uint64_t>(trial));
    saveImage(img, dir / "a.png");
    saveImage(img, dir / "a.bmp");
    CHECK(loadCover(dir / "a.png") == img);
    CHECK(loadCover(dir / "a.bmp") == img);
    CHECK(decodeImage(encodePng(img)) == img);
  }
  CHECK_THROWS_AS(saveImage(textures::randomImage(2, 2, 1), dir / "a.gif"), ValidationError);
}

TEST_CASE("corrupt and missing files are I/O errors") {
  TempDir dir;
  const auto bytes = encodePng(textures::randomImage(32, 32, 3));
  writeFile(dir / "cut.png", std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + bytes.size() / 2));
  CHECK_THROWS_AS(loadCover(dir / "cut.png"), IoError);
  const auto bmp = encodeBmp(textures::randomImage(8, 8, 3));
  writeFile(dir / "cut.bmp", std::vector<std::uint8_t>(bmp.begin(), bmp.begin() + 80));
  CHECK_THROWS_AS(loadCover(dir / "cut.bmp"), IoError);
  CHECK_THROWS_AS(loadCover(dir / "missing.png"), IoError);
  writeFile(dir / "junk.png", std::vector<std::uint8_t>{1, 2, 3, 4});
  CHECK_THROWS_AS(loadCover(dir / "junk.png"), IoError);
}

TEST_CASE("sample flattening") {
  const RasterImage one(1, 1);
  for (int c = 0; c < 3; ++c) {
    const auto loc = locateSample(one, static_cast<std::uint64_t>(c));
    CHECK(loc.pixel == 0);
    CHECK(loc.channel == c);
  }
  const RasterImage two(2, 1);
  const auto loc = locateSample(two, 5);
  CHECK(loc.pixel == 1);
  CHECK(loc.channel == 2);

  const RasterImage img(7, 5);
  for (std::uint64_t k = 0; k < img.sampleCount(); ++k) {
    const auto l = locateSample(img, k);
    CHECK(flattenIndex(img, l.x, l.y, l.channel) == k);
    CHECK(l.pixel == static_cast<std::uint64_t>(l.y) * 7 + static_cast<std::uint64_t>(l.x));
  }
  CHECK_THROWS_AS(locateSample(img, img.sampleCount()), ValidationError);
}

TEST_CASE("audio payloads") {
  TempDir dir;
  const auto wav = loadAudio(testData("empty.wav"));
  CHECK(wav.rawBytes.size() == 44);
  CHECK(wav.declaredFormat == AudioFormat::Wav);
  CHECK(wav.warning.empty());

  writeFile(dir / "fake.wav", std::vector<std::uint8_t>{'n', 'o', 'p', 'e'});
  const auto fake = loadAudio(dir / "fake.wav");
  CHECK(fake.declaredFormat == AudioFormat::Opaque);
  CHECK_FALSE(fake.warning.empty());

  const std::vector<std::uint8_t> blob{0, 1, 2, 255, 254};
  writeFile(dir / "blob.bin", blob);
  const auto bin = loadAudio(dir / "blob.bin");
  CHECK(bin.declaredFormat == AudioFormat::Opaque);
  saveAudio(bin, dir / "copy.bin");
  CHECK(readFile(dir / "copy.bin") == blob);

  const auto tone = loadAudio(testData("tone.wav"));
  saveAudio(tone, dir / "tone.wav");
  CHECK(readFile(dir / "tone.wav") == readFile(testData("tone.wav")));
  CHECK_THROWS_AS(loadAudio(dir / "nope.wav"), IoError);
}
