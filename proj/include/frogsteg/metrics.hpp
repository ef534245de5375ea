#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frogsteg/image.hpp"
#include "frogsteg/window_kernels.hpp"

namespace frogsteg::metrics {

/// First and second moments of one window pair (u from the first image,
/// v from the second). Variances and covariance are population moments.
struct WindowStats {
  double meanU = 0.0;
  double meanV = 0.0;
  double varU = 0.0;
  double varV = 0.0;
  double covUV = 0.0;

  static WindowStats fromSums(const kernels::WindowSums& sums);
};

struct FitnessConfig {
  double alpha = 0.5;
  double psnrCap = 100.0;
  double ssimC1 = (0.01 * 255.0) * (0.01 * 255.0);
  double ssimC2 = (0.03 * 255.0) * (0.03 * 255.0);
  int windowSize = 8;

  void validate() const;
};

double mseFromSquaredErrorSum(std::int64_t sse, std::size_t sampleCount);
/// 10*log10(255^2/mse), capped at `cap` (also used when mse is 0).
double psnrFromMse(double mse, double cap);
/// alpha*ssim + (1-alpha)*psnr/100.
double compositeFitness(double ssim, double psnr, double alpha);

double ssimIndex(const WindowStats& s, double c1, double c2);
/// Universal quality index of one window, or nullopt when the denominator
/// is below 1e-12.
std::optional<double> uqiIndex(const WindowStats& s);

double mse(const ImageView& a, const ImageView& b, kernels::Backend backend = kernels::Backend::OpenMP);
double psnr(const ImageView& a, const ImageView& b, const FitnessConfig& cfg,
            kernels::Backend backend = kernels::Backend::OpenMP);
/// Mean per-window UQI over non-overlapping windows of every channel.
/// Throws ValidationError if every window is degenerate.
double uqi(const ImageView& a, const ImageView& b, int window,
           kernels::Backend backend = kernels::Backend::OpenMP);
double ssim(const ImageView& a, const ImageView& b, const FitnessConfig& cfg,
            kernels::Backend backend = kernels::Backend::OpenMP);
double fitness(const ImageView& stego, const ImageView& ref, const FitnessConfig& cfg,
               kernels::Backend backend = kernels::Backend::OpenMP);

struct QualityReport {
  double mse = 0.0;
  double psnr = 0.0;
  double ssim = 0.0;
  double fitness = 0.0;
};

/// MSE, PSNR, SSIM and Z from a single pass over the pair.
QualityReport evaluateQuality(const ImageView& stego, const ImageView& ref, const FitnessConfig& cfg,
                              kernels::Backend backend = kernels::Backend::OpenMP);

/// Incremental fitness of `ref` with a set of LSB flips applied, scored
/// against `ref` itself. Only the windows touched by a flip change, so an
/// evaluation costs O(flips + windows) instead of a full image pass.
///
/// Flip indices must be distinct; each one toggles the LSB of that sample.
/// The result equals fitness(flipped, ref, cfg) exactly because both paths
/// reduce the same integer window sums in the same order.
class FitnessAccumulator {
 public:
  FitnessAccumulator(const ImageView& ref, const FitnessConfig& cfg);

  void reset();
  /// Throws ValidationError for an index outside the image.
  void flip(std::uint64_t sampleIndex);
  double score() const;

  double evaluate(std::span<const std::uint64_t> flips);

  std::size_t sampleCount() const { return samples_.size(); }
  const kernels::WindowGrid& grid() const { return grid_; }

 private:
  struct Delta {
    std::int64_t sum = 0;
    std::int64_t sumSq = 0;
    std::int64_t sumCross = 0;
  };

  FitnessConfig cfg_;
  kernels::WindowGrid grid_;
  std::vector<std::uint8_t> samples_;
  std::vector<kernels::WindowSums> base_;
  std::vector<Delta> delta_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint8_t> isTouched_;
  std::int64_t flips_ = 0;
};

}  // namespace frogsteg::metrics
