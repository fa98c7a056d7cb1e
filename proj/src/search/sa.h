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

struct SaConfig {
  double cooling_divisor = 1.2;
  double t_start = 1.0;
  double t_floor = 1e-6;
  int equilibrium_window = 8;      ///< perturbations inspected for equilibrium
  int equilibrium_max_accepts = 1; ///< accepted moves tolerated in the window
  double energy_scale = 1000.0;    ///< scales score differences to temperatures
  /// Safety bound on proposals per temperature level. Degenerate inputs
  /// (a perfectly flat landscape, e.g. frozen h == l over constant F0) would
  /// otherwise never reach equilibrium.
  int max_steps_per_level = 20000;
  std::uint64_t seed = 0;
  RTable table = RTable::dschang1();
  bool allow_upstep = true;
  std::optional<ScalingParams> frozen_params;
};

/// The solver's current point: a transcription, parameters and their score.
struct SaState {
  Transcription tones;
  ScalingParams params;
  double evaluation = 0.0;
};

/// Per-temperature trace hook: temperature and best score found so far.
using SaObserver = std::function<void(double temperature, double best)>;

/// Proposes a neighbour of `s` at temperature `t`: the max(1, round(n*t))
/// tones with the worst per-position blame are resampled uniformly, and each
/// parameter p moves by a uniform draw from [-rho, rho] with
/// rho = t * (range width), clamped to its range. The returned state's
/// evaluation is left untouched (callers rescore).
SaState perturb(const SaState& s, double t, std::span<const double> f0,
                std::span<const Tone> alphabet, const RTable& table,
                bool params_frozen, Rng& rng);

/// Blame assigned to each position: the squared-error terms its tone appears
/// in (as the predicted tone and as the predecessor of the next one).
std::vector<double> position_scores(std::span<const Tone> tones, std::span<const double> f0,
                                    const ScalingParams& p, const RTable& table);

/// Metropolis-style acceptance: always for an improvement, otherwise with
/// probability exp(-delta / (scale * t)) via a single uniform draw.
bool accept(double delta, double t, double scale, Rng& rng);

/// True once no more than `max_accepts` of the last `window` perturbations
/// were accepted; requires at least `window` entries.
bool equilibrium_reached(std::span<const bool> accepted_history, int window = 8,
                         int max_accepts = 1);

/// Simulated-annealing search; deterministic for a given seed. Cooling runs
/// from t_start down past t_floor with division by cooling_divisor, reaching
/// equilibrium at each temperature; after equilibrium the current state is
/// reset to the best found so far.
Solution sa_search(std::span<const double> f0, const SaConfig& cfg,
                   const ExclusionZones* zones = nullptr, const SaObserver& observer = {});

}  // namespace tonesearch
