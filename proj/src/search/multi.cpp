#include "search/multi.h"

#include <algorithm>
#include <cmath>

#include "core/errors.h"
#include "core/rng.h"
#include "search/exclusion.h"
#include "search/gene.h"

namespace tonesearch {

KBestResult k_best(std::span<const double> f0, const MultiConfig& cfg) {
  const std::size_t n = f0.size();
  if (n < 2) throw InvalidArgumentError("k_best needs at least two F0 values");
  if (cfg.k < 1) throw InvalidArgumentError("k must be at least 1");

  const bool use_sa = cfg.solver == SolverKind::Sa;
  const std::uint64_t master = use_sa ? cfg.sa.seed : cfg.ga.seed;
  const TableVariant variant = use_sa ? cfg.sa.table.variant() : cfg.ga.table.variant();
  const bool allow_upstep = use_sa ? cfg.sa.allow_upstep : cfg.ga.allow_upstep;
  const std::span<const Tone> alphabet = alphabet_for(variant, allow_upstep);

  ExclusionZones zones(n);
  KBestResult result;

  // Unreachable with sane inputs; keeps adversarial configurations finite.
  const int max_restarts = std::max(100, 20 * cfg.k);

  for (int restart = 0; static_cast<int>(result.solutions.size()) < cfg.k; ++restart) {
    if (restart >= max_restarts) {
      result.gave_up = true;
      break;
    }
    if (!zones.empty()) {
      // Probe rule: when a handful of random transcriptions all land inside
      // existing zones, the unexplored space is (as good as) exhausted.
      Rng probe_rng(derive_seed(master, 0x8000000000000000ULL + static_cast<std::uint64_t>(restart)));
      bool all_excluded = true;
      for (int p = 0; p < cfg.giveup_probes; ++p) {
        if (!zones.contains(random_transcription(n, alphabet, probe_rng))) {
          all_excluded = false;
          break;
        }
      }
      if (all_excluded) {
        result.gave_up = true;
        break;
      }
    }

    const std::uint64_t run_seed =
        restart == 0 ? master : derive_seed(master, static_cast<std::uint64_t>(restart));
    Solution sol;
    if (use_sa) {
      SaConfig run_cfg = cfg.sa;
      run_cfg.seed = run_seed;
      sol = sa_search(f0, run_cfg, &zones);
    } else {
      GaConfig run_cfg = cfg.ga;
      run_cfg.seed = run_seed;
      sol = ga_search(f0, run_cfg, &zones);
    }
    if (!std::isfinite(sol.evaluation)) continue;  // run never escaped the zones

    sol.transcription = normalize_initial_step(std::move(sol.transcription));
    zones.add(sol.transcription);
    result.solutions.push_back(std::move(sol));
  }

  std::stable_sort(result.solutions.begin(), result.solutions.end(),
                   [](const Solution& a, const Solution& b) { return a.evaluation < b.evaluation; });
  return result;
}

}  // namespace tonesearch
