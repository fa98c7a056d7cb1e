#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/model.h"
#include "search/ga.h"
#include "search/sa.h"

namespace tonesearch {

enum class SolverKind : uint8_t { Ga, Sa };

struct MultiConfig {
  int k = 1;
  SolverKind solver = SolverKind::Sa;
  GaConfig ga;
  SaConfig sa;
  int giveup_probes = 5;
};

/// Result of a k-best run; `gave_up` is set when the probe rule fired (or a
/// restart cap was hit) before k solutions were collected.
struct KBestResult {
  std::vector<Solution> solutions;  ///< sorted by evaluation, ascending
  bool gave_up = false;
};

/// Repeated seeded searches with exclusion zones of radius n/3 around every
/// transcription already reported. The first restart uses the configured
/// seed unchanged (so k = 1 is exactly one plain solver run); later restarts
/// derive their seeds from it. Before each restart after the first find,
/// `giveup_probes` random transcriptions are drawn: if all of them are
/// excluded, the run gives up. Reported transcriptions are initial-step
/// normalized and pairwise satisfy 3 * distance > n.
KBestResult k_best(std::span<const double> f0, const MultiConfig& cfg);

}  // namespace tonesearch
