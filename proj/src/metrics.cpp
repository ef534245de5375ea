#include "frogsteg/metrics.hpp"

#include <cmath>
#include <string>

#include "frogsteg/errors.hpp"

namespace frogsteg::metrics {

namespace {

constexpr double kUqiDenominatorFloor = 1e-12;

// (n * sumXY - sumX * sumY) / n^2 with the numerator formed exactly.
double centeredMoment(std::int64_t n, std::int64_t sumXY, std::int64_t sumX, std::int64_t sumY) {
  const __int128 numerator = static_cast<__int128>(n) * sumXY - static_cast<__int128>(sumX) * sumY;
  const double denom = static_cast<double>(n) * static_cast<double>(n);
  return static_cast<double>(numerator) / denom;
}

double meanSsim(const std::vector<kernels::WindowSums>& sums, const FitnessConfig& cfg) {
  if (sums.empty()) throw ValidationError("SSIM of an empty image is undefined");
  double total = 0.0;
  for (const auto& w : sums) total += ssimIndex(WindowStats::fromSums(w), cfg.ssimC1, cfg.ssimC2);
  return total / static_cast<double>(sums.size());
}

}  // namespace

WindowStats WindowStats::fromSums(const kernels::WindowSums& s) {
  WindowStats st;
  const double n = static_cast<double>(s.count);
  st.meanU = static_cast<double>(s.sumU) / n;
  st.meanV = static_cast<double>(s.sumV) / n;
  st.varU = centeredMoment(s.count, s.sumUU, s.sumU, s.sumU);
  st.varV = centeredMoment(s.count, s.sumVV, s.sumV, s.sumV);
  st.covUV = centeredMoment(s.count, s.sumUV, s.sumU, s.sumV);
  return st;
}

void FitnessConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0, 1]");
  if (!(ssimC1 > 0.0) || !(ssimC2 > 0.0)) throw ValidationError("SSIM constants must be positive");
  if (!(psnrCap > 0.0)) throw ValidationError("PSNR cap must be positive");
  if (windowSize < 2) throw ValidationError("window size must be at least 2");
}

double mseFromSquaredErrorSum(std::int64_t sse, std::size_t sampleCount) {
  if (sampleCount == 0) throw ValidationError("MSE of an empty image is undefined");
  return static_cast<double>(sse) / static_cast<double>(sampleCount);
}

double psnrFromMse(double mse, double cap) {
  if (mse <= 0.0) return cap;
  const double value = 10.0 * std::log10(kMaxSampleValue * kMaxSampleValue / mse);
  return value > cap ? cap : value;
}

double compositeFitness(double ssim, double psnr, double alpha) {
  return alpha * ssim + (1.0 - alpha) * (psnr / 100.0);
}

// The association order keeps ssimIndex(s, s) == 1 exactly: 2*mu*mu and
// mu*mu + mu*mu are both 2*round(mu^2).
double ssimIndex(const WindowStats& s, double c1, double c2) {
  const double numerator = (2.0 * s.meanU * s.meanV + c1) * (2.0 * s.covUV + c2);
  const double denominator = (s.meanU * s.meanU + s.meanV * s.meanV + c1) * (s.varU + s.varV + c2);
  return numerator / denominator;
}

std::optional<double> uqiIndex(const WindowStats& s) {
  const double denominator = (s.meanU * s.meanU + s.meanV * s.meanV) * (s.varU + s.varV);
  if (denominator < kUqiDenominatorFloor) return std::nullopt;
  return (4.0 * s.covUV) * (s.meanU * s.meanV) / denominator;
}

double mse(const ImageView& a, const ImageView& b, kernels::Backend backend) {
  const std::int64_t sse = kernels::squaredErrorSum(a, b, backend);
  return mseFromSquaredErrorSum(sse, a.sampleCount());
}

double psnr(const ImageView& a, const ImageView& b, const FitnessConfig& cfg, kernels::Backend backend) {
  return psnrFromMse(mse(a, b, backend), cfg.psnrCap);
}

double uqi(const ImageView& a, const ImageView& b, int window, kernels::Backend backend) {
  if (window < 2) throw ValidationError("UQI window must be at least 2");
  requireSameShape(a, b);
  const kernels::WindowGrid grid(a.width, a.height, window);
  const auto sums = kernels::windowSums(a, b, grid, backend);
  double total = 0.0;
  std::size_t used = 0;
  for (const auto& w : sums) {
    if (const auto q = uqiIndex(WindowStats::fromSums(w))) {
      total += *q;
      ++used;
    }
  }
  if (used == 0) throw ValidationError("UQI undefined: every window is degenerate");
  return total / static_cast<double>(used);
}

double ssim(const ImageView& a, const ImageView& b, const FitnessConfig& cfg, kernels::Backend backend) {
  cfg.validate();
  requireSameShape(a, b);
  const kernels::WindowGrid grid(a.width, a.height, cfg.windowSize);
  return meanSsim(kernels::windowSums(a, b, grid, backend), cfg);
}

double fitness(const ImageView& stego, const ImageView& ref, const FitnessConfig& cfg,
               kernels::Backend backend) {
  return evaluateQuality(stego, ref, cfg, backend).fitness;
}

QualityReport evaluateQuality(const ImageView& stego, const ImageView& ref, const FitnessConfig& cfg,
                              kernels::Backend backend) {
  cfg.validate();
  requireSameShape(stego, ref);
  const kernels::WindowGrid grid(stego.width, stego.height, cfg.windowSize);
  const auto sums = kernels::windowSums(stego, ref, grid, backend);
  std::int64_t sse = 0;
  for (const auto& w : sums) sse += w.sumUU + w.sumVV - 2 * w.sumUV;

  QualityReport report;
  report.mse = mseFromSquaredErrorSum(sse, stego.sampleCount());
  report.psnr = psnrFromMse(report.mse, cfg.psnrCap);
  report.ssim = meanSsim(sums, cfg);
  report.fitness = compositeFitness(report.ssim, report.psnr, cfg.alpha);
  return report;
}

FitnessAccumulator::FitnessAccumulator(const ImageView& ref, const FitnessConfig& cfg)
    : cfg_(cfg), samples_(ref.samples.begin(), ref.samples.end()) {
  cfg_.validate();
  ref.validate();
  if (ref.empty()) throw ValidationError("fitness accumulator needs a non-empty image");
  grid_ = kernels::WindowGrid(ref.width, ref.height, cfg_.windowSize);
  base_ = kernels::windowSums(ref, ref, grid_, kernels::Backend::OpenMP);
  delta_.assign(base_.size(), Delta{});
  isTouched_.assign(base_.size(), 0);
}

void FitnessAccumulator::reset() {
  for (const auto w : touched_) {
    delta_[w] = Delta{};
    isTouched_[w] = 0;
  }
  touched_.clear();
  flips_ = 0;
}

void FitnessAccumulator::flip(std::uint64_t sampleIndex) {
  if (sampleIndex >= samples_.size()) {
    throw ValidationError("flip index " + std::to_string(sampleIndex) + " outside image of " +
                          std::to_string(samples_.size()) + " samples");
  }
  const std::int64_t r = samples_[sampleIndex];
  const std::int64_t d = (r & 1) ? -1 : 1;
  const auto w = static_cast<std::uint32_t>(grid_.windowOfSample(sampleIndex));
  if (!isTouched_[w]) {
    isTouched_[w] = 1;
    touched_.push_back(w);
  }
  Delta& delta = delta_[w];
  delta.sum += d;
  delta.sumSq += 2 * r * d + 1;
  delta.sumCross += r * d;
  ++flips_;
}

double FitnessAccumulator::score() const {
  double total = 0.0;
  for (std::size_t w = 0; w < base_.size(); ++w) {
    const kernels::WindowSums& b = base_[w];
    const Delta& d = delta_[w];
    kernels::WindowSums s;
    s.count = b.count;
    s.sumU = b.sumU + d.sum;
    s.sumV = b.sumV;
    s.sumUU = b.sumUU + d.sumSq;
    s.sumVV = b.sumVV;
    s.sumUV = b.sumUV + d.sumCross;
    total += ssimIndex(WindowStats::fromSums(s), cfg_.ssimC1, cfg_.ssimC2);
  }
  const double ssimValue = total / static_cast<double>(base_.size());
  const double psnrValue = psnrFromMse(mseFromSquaredErrorSum(flips_, samples_.size()), cfg_.psnrCap);
  return compositeFitness(ssimValue, psnrValue, cfg_.alpha);
}

double FitnessAccumulator::evaluate(std::span<const std::uint64_t> flips) {
  reset();
  for (const auto k : flips) flip(k);
  return score();
}

}  // namespace frogsteg::metrics
