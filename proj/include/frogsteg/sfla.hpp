#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

// Shuffled Frog Leaping optimizer over the unit hypercube [0,1)^D,
// maximizing a caller-supplied objective.
//
// Random draw order (part of the reproducibility contract):
//   1. population init: F*D genes, frog-major, gene-minor;
//   2. per shuffle, per memeplex (in index order), per local iteration:
//      q draws for the submemeplex, then one r per jump attempt actually
//      made, then D genes if a random replacement is needed.
// All draws come from Rng::uniform().
namespace frogsteg::sfla {

/// mt19937_64 with a fixed integer-to-double mapping, so gene sequences do
/// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct Params {
  std::size_t frogCount = 30;
  std::size_t memeplexCount = 5;
  std::size_t frogsPerMemeplex = 6;
  std::size_t submemeplexSize = 4;
  std::size_t localIterations = 10;
  std::size_t maxShuffles = 20;
  std::size_t geneDim = 2;
  std::uint64_t seed = 0;

  /// Throws ValidationError unless F = m*eta, 1 <= q <= eta, N >= 1,
  /// maxShuffles >= 1 and D >= 1.
  void validate() const;
};

struct Frog {
  std::vector<double> genes;
  double fitness = 0.0;
  std::size_t id = 0;
};

/// Positions into the ranked population, fitness-descending.
struct Memeplex {
  std::vector<std::size_t> members;
};

struct SearchTrace {
  double initialBest = 0.0;
  std::vector<double> bestPerShuffle;
  std::uint64_t evaluations = 0;
  std::uint64_t jumpAttempts = 0;
};

struct Result {
  Frog best;
  SearchTrace trace;
};

using Objective = std::function<double(std::span<const double>)>;

std::vector<Frog> initPopulation(const Params& params, Rng& rng, const Objective& evaluate);

/// Stable sort, fitness-descending.
void rankPopulation(std::vector<Frog>& population);

/// Rank-i frog goes to memeplex i mod m. Throws ValidationError when the
/// population size is not a multiple of m.
std::vector<Memeplex> partitionMemeplexes(std::span<const Frog> ranked, std::size_t memeplexCount);

/// Selection weight of each rank (1-based j): 2(eta+1-j) / (eta(eta+1)).
std::vector<double> triangularWeights(std::size_t eta);

/// Draws q distinct positions 0..eta-1 without replacement under the
/// triangular weights. Returned ascending, so front() is the best frog and
/// back() the worst when the memeplex is fitness-sorted.
std::vector<std::size_t> selectSubmemeplex(std::size_t eta, std::size_t q, Rng& rng);

struct JumpOutcome {
  Frog frog;
  int attempts = 0;  ///< 1: toward submemeplex best, 2: toward global best, 3: random
};

/// Moves the worst frog toward the submemeplex best, then the global best,
/// and finally replaces it at random; stops at the first strict improvement.
JumpOutcome jumpWorst(const Frog& worst, const Frog& best, const Frog& global, Rng& rng,
                      const Objective& evaluate);

Result runSfla(const Params& params, const Objective& evaluate);

}  // namespace frogsteg::sfla
