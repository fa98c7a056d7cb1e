#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "core/model.h"
#include "core/rng.h"
#include "search/exclusion.h"
#include "search/gene.h"

namespace tonesearch {

struct GaConfig {
  int population = 100;
  int generations = 300;
  double base_mutation_rate = 0.005;
  double spike_mutation_rate = 0.5;
  int stagnation_window = 10;   ///< generations without improvement before a spike
  std::uint64_t seed = 0;
  RTable table = RTable::dschang1();
  bool allow_upstep = true;
  std::optional<ScalingParams> frozen_params;
};

/// Per-generation trace hook: generation index (1-based), best score in the
/// pool after breeding, and the mutation rate the generation was bred with.
using GaObserver = std::function<void(int generation, double best, double mutation_rate)>;

/// Bitstring splice: the top `cut` bits (most-significant-first) come from
/// `first`, the remaining 16 - cut bits from `second`. cut is in [0, 16].
std::uint16_t splice_code(std::uint16_t first, std::uint16_t second, int cut);

/// Greedy multi-point crossover. Parameter codes are spliced at one random
/// cut each with randomized argument order; the offspring's tone string is
/// then assembled left-to-right, position 1 from `a`, every later position
/// choosing whichever parent's tone gives the smaller local squared error
/// under the offspring's decoded parameters (ties go to `a`).
Gene crossover(const Gene& a, const Gene& b, std::span<const double> f0,
               const RTable& table, const ParamCodec& codec, Rng& rng);

/// Each tone is independently resampled from the alphabet with probability
/// `rate`; each of the 48 parameter bits independently flips with the same
/// probability (skipped when the codec is frozen).
void mutate(Gene& g, double rate, std::span<const Tone> alphabet, const ParamCodec& codec,
            Rng& rng);

/// Index of the best of three distinct random picks from the pool.
/// Throws InvalidArgumentError when the pool has fewer than 3 entries.
std::size_t best_of_three(std::span<const double> scores, Rng& rng);

/// Genetic search for the transcription (and parameters) minimizing the mean
/// squared prediction error against X. Deterministic for a given seed. The
/// best gene of each generation survives unmutated, so the best score never
/// increases across generations.
Solution ga_search(std::span<const double> f0, const GaConfig& cfg,
                   const ExclusionZones* zones = nullptr, const GaObserver& observer = {});

}  // namespace tonesearch
