#include "search/batch.h"

#include "core/errors.h"
#include "core/rng.h"

namespace tonesearch {

namespace {

Solution one_run(std::span<const double> f0, SolverKind solver, const GaConfig& ga,
                 const SaConfig& sa, std::uint64_t master_seed, int index) {
  const std::uint64_t seed = derive_seed(master_seed, static_cast<std::uint64_t>(index));
  if (solver == SolverKind::Sa) {
    SaConfig cfg = sa;
    cfg.seed = seed;
    return sa_search(f0, cfg);
  }
  GaConfig cfg = ga;
  cfg.seed = seed;
  return ga_search(f0, cfg);
}

}  // namespace

std::vector<Solution> run_batch_serial(std::span<const double> f0, SolverKind solver,
                                       const GaConfig& ga, const SaConfig& sa, int runs,
                                       std::uint64_t master_seed) {
  if (runs < 1) throw InvalidArgumentError("batch needs at least one run");
  std::vector<Solution> out(runs);
  for (int i = 0; i < runs; ++i) {
    out[i] = one_run(f0, solver, ga, sa, master_seed, i);
  }
  return out;
}

std::vector<Solution> run_batch(std::span<const double> f0, SolverKind solver,
                                const GaConfig& ga, const SaConfig& sa, int runs,
                                std::uint64_t master_seed, int threads) {
  if (runs < 1) throw InvalidArgumentError("batch needs at least one run");
  std::vector<Solution> out(runs);
  // The first run executes serially so input and config errors surface as
  // ordinary exceptions; only then do the remaining runs fan out.
  out[0] = one_run(f0, solver, ga, sa, master_seed, 0);
#ifdef _OPENMP
  if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 1; i < runs; ++i) {
      out[i] = one_run(f0, solver, ga, sa, master_seed, i);
    }
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 1; i < runs; ++i) {
      out[i] = one_run(f0, solver, ga, sa, master_seed, i);
    }
  }
#else
  (void)threads;
  for (int i = 1; i < runs; ++i) {
    out[i] = one_run(f0, solver, ga, sa, master_seed, i);
  }
#endif
  return out;
}

}  // namespace tonesearch
