#pragma once

#include <cstdint>

#include "frogsteg/image.hpp"

namespace frogsteg::textures {

/// Deterministic synthetic cover: a smooth two-color gradient overlaid with
/// flat patches, noise patches of varying amplitude and a striped region.
/// Mixes smooth and busy areas so that embedding position matters.
RasterImage generate(int width, int height, std::uint64_t seed);

/// Uniformly random samples.
RasterImage randomImage(int width, int height, std::uint64_t seed);

}  // namespace frogsteg::textures
