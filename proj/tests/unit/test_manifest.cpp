#include <doctest.h>

#include "frogsteg/errors.hpp"
#include "frogsteg/manifest.hpp"

using namespace frogsteg;

TEST_CASE("manifest round trip keeps parameters exact") {
  RunManifest m;
  m.selector.sfla.memeplexCount = 4;
  m.selector.sfla.frogsPerMemeplex = 5;
  m.selector.sfla.frogCount = 20;
  m.selector.sfla.submemeplexSize = 3;
  m.selector.sfla.localIterations = 7;
  m.selector.sfla.maxShuffles = 9;
  m.selector.fitness.alpha = 1.0 / 3.0;
  m.selector.fitness.windowSize = 6;
  m.evalLength = 1234;
  m.selector.evalLength = 1234;
  m.imageWidth = 256;
  m.imageHeight = 128;
  m.payloadBytes = 999;
  m.psnr = 71.25;
  m.ssim = 0.9999;
  m.fitness = 0.85;

  const auto back = RunManifest::parse(m.serialize());
  CHECK(back.selector.sfla.frogCount == 20);
  CHECK(back.selector.sfla.memeplexCount == 4);
  CHECK(back.selector.sfla.frogsPerMemeplex == 5);
  CHECK(back.selector.sfla.submemeplexSize == 3);
  CHECK(back.selector.sfla.localIterations == 7);
  CHECK(back.selector.sfla.maxShuffles == 9);
  CHECK(back.selector.fitness.alpha == 1.0 / 3.0);
  CHECK(back.selector.fitness.ssimC1 == m.selector.fitness.ssimC1);
  CHECK(back.selector.fitness.windowSize == 6);
  CHECK(back.selector.evalLength == std::optional<std::uint64_t>(1234));
  CHECK(back.imageWidth == 256);
  CHECK(back.payloadBytes == 999);
  CHECK(back.psnr == doctest::Approx(71.25));
  CHECK(m.serialize().find("psnr = 71.250000") != std::string::npos);
}

TEST_CASE("manifest parse errors and defaults") {
  CHECK_THROWS_AS(RunManifest::parse("sfla.frogs = lots\n"), ValidationError);
  CHECK_THROWS_AS(RunManifest::parse("no equals sign\n"), ValidationError);
  const auto m = RunManifest::parse("# comment\n\nunknown = 1\n");
  CHECK(m.selector.sfla.frogCount == 30);
  CHECK_FALSE(m.selector.evalLength.has_value());
}
