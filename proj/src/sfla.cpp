#include "frogsteg/sfla.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frogsteg/errors.hpp"

namespace frogsteg::sfla {

namespace {

// Convex combinations can round up to exactly 1.0 in floating point.
double clampGene(double g) {
  if (g < 0.0) return 0.0;
  if (g >= 1.0) return std::nextafter(1.0, 0.0);
  return g;
}

std::vector<double> randomGenes(std::size_t dim, Rng& rng) {
  std::vector<double> genes(dim);
  for (auto& g : genes) g = rng.uniform();
  return genes;
}

std::vector<double> leap(std::span<const double> from, std::span<const double> toward, double r) {
  std::vector<double> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = clampGene(from[i] + r * (toward[i] - from[i]));
  return out;
}

double checkedEvaluate(const Objective& evaluate, std::span<const double> genes) {
  const double f = evaluate(genes);
  if (!std::isfinite(f)) throw ValidationError("objective returned a non-finite fitness");
  return f;
}

}  // namespace

void Params::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError("invalid SFLA parameters: " + msg); };
  if (memeplexCount < 1) fail("memeplex count must be at least 1");
  if (frogsPerMemeplex < 1) fail("frogs per memeplex must be at least 1");
  if (frogCount != memeplexCount * frogsPerMemeplex) {
    fail("frog count " + std::to_string(frogCount) + " != memeplexes " + std::to_string(memeplexCount) +
         " x frogs per memeplex " + std::to_string(frogsPerMemeplex));
  }
  if (submemeplexSize < 1 || submemeplexSize > frogsPerMemeplex) fail("submemeplex size must be in [1, eta]");
  if (localIterations < 1) fail("local iterations must be at least 1");
  if (maxShuffles < 1) fail("shuffle count must be at least 1");
  if (geneDim < 1) fail("gene dimension must be at least 1");
}

std::vector<Frog> initPopulation(const Params& params, Rng& rng, const Objective& evaluate) {
  params.validate();
  std::vector<Frog> population(params.frogCount);
  for (std::size_t i = 0; i < population.size(); ++i) {
    population[i].id = i;
    population[i].genes = randomGenes(params.geneDim, rng);
  }
  for (auto& frog : population) frog.fitness = checkedEvaluate(evaluate, frog.genes);
  return population;
}

void rankPopulation(std::vector<Frog>& population) {
  std::stable_sort(population.begin(), population.end(),
                   [](const Frog& a, const Frog& b) { return a.fitness > b.fitness; });
}

std::vector<Memeplex> partitionMemeplexes(std::span<const Frog> ranked, std::size_t memeplexCount) {
  if (memeplexCount == 0 || ranked.size() % memeplexCount != 0) {
    throw ValidationError("population of " + std::to_string(ranked.size()) +
                          " cannot be split evenly into " + std::to_string(memeplexCount) + " memeplexes");
  }
  std::vector<Memeplex> memeplexes(memeplexCount);
  for (auto& mp : memeplexes) mp.members.reserve(ranked.size() / memeplexCount);
  for (std::size_t i = 0; i < ranked.size(); ++i) memeplexes[i % memeplexCount].members.push_back(i);
  return memeplexes;
}

std::vector<double> triangularWeights(std::size_t eta) {
  std::vector<double> weights(eta);
  const double norm = static_cast<double>(eta) * static_cast<double>(eta + 1);
  for (std::size_t j = 1; j <= eta; ++j) weights[j - 1] = 2.0 * static_cast<double>(eta + 1 - j) / norm;
  return weights;
}

// Integer weights eta+1-j keep the cumulative walk exact.
std::vector<std::size_t> selectSubmemeplex(std::size_t eta, std::size_t q, Rng& rng) {
  if (q > eta) throw ValidationError("submemeplex larger than memeplex");
  std::vector<std::size_t> remaining(eta);
  for (std::size_t j = 0; j < eta; ++j) remaining[j] = j;
  std::vector<std::size_t> chosen;
  chosen.reserve(q);
  for (std::size_t pick = 0; pick < q; ++pick) {
    std::size_t total = 0;
    for (const auto pos : remaining) total += eta - pos;
    const double target = rng.uniform() * static_cast<double>(total);
    std::size_t cumulative = 0;
    std::size_t slot = remaining.size() - 1;
    for (std::size_t s = 0; s < remaining.size(); ++s) {
      cumulative += eta - remaining[s];
      if (target < static_cast<double>(cumulative)) {
        slot = s;
        break;
      }
    }
    chosen.push_back(remaining[slot]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(slot));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

JumpOutcome jumpWorst(const Frog& worst, const Frog& best, const Frog& global, Rng& rng,
                      const Objective& evaluate) {
  JumpOutcome out;
  out.frog.id = worst.id;

  const Frog* targets[] = {&best, &global};
  for (const Frog* target : targets) {
    const double r = rng.uniform();
    out.frog.genes = leap(worst.genes, target->genes, r);
    out.frog.fitness = checkedEvaluate(evaluate, out.frog.genes);
    ++out.attempts;
    if (out.frog.fitness > worst.fitness) return out;
  }

  out.frog.genes = randomGenes(worst.genes.size(), rng);
  out.frog.fitness = checkedEvaluate(evaluate, out.frog.genes);
  ++out.attempts;
  return out;
}

Result runSfla(const Params& params, const Objective& evaluate) {
  params.validate();
  Rng rng(params.seed);
  Result result;
  SearchTrace& trace = result.trace;

  std::vector<Frog> population = initPopulation(params, rng, evaluate);
  trace.evaluations = population.size();

  rankPopulation(population);
  Frog global = population.front();
  trace.initialBest = global.fitness;

  for (std::size_t shuffle = 0; shuffle < params.maxShuffles; ++shuffle) {
    rankPopulation(population);
    if (population.front().fitness > global.fitness) global = population.front();
    auto memeplexes = partitionMemeplexes(population, params.memeplexCount);

    for (auto& mp : memeplexes) {
      for (std::size_t iter = 0; iter < params.localIterations; ++iter) {
        const auto sub = selectSubmemeplex(mp.members.size(), params.submemeplexSize, rng);
        const std::size_t bestPos = mp.members[sub.front()];
        const std::size_t worstPos = mp.members[sub.back()];

        JumpOutcome jump = jumpWorst(population[worstPos], population[bestPos], global, rng, evaluate);
        trace.evaluations += static_cast<std::uint64_t>(jump.attempts);
        trace.jumpAttempts += static_cast<std::uint64_t>(jump.attempts);
        population[worstPos] = std::move(jump.frog);
        if (population[worstPos].fitness > global.fitness) global = population[worstPos];

        std::stable_sort(mp.members.begin(), mp.members.end(), [&](std::size_t a, std::size_t b) {
          return population[a].fitness > population[b].fitness;
        });
      }
    }
    trace.bestPerShuffle.push_back(global.fitness);
  }

  result.best = std::move(global);
  return result;
}

}  // namespace frogsteg::sfla
