#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/model.h"
#include "search/multi.h"

namespace tonesearch {

/// Runs `runs` independent searches of the configured solver, run i seeded
/// with derive_seed(master_seed, i). Every run is self-contained, so results
/// are identical however the runs are scheduled.
///
/// `run_batch` fans the runs out across OpenMP threads (`threads` <= 0 means
/// the OpenMP default); `run_batch_serial` is the loop reference kept for
/// testing and benchmarking.
std::vector<Solution> run_batch(std::span<const double> f0, SolverKind solver,
                                const GaConfig& ga, const SaConfig& sa, int runs,
                                std::uint64_t master_seed, int threads = 0);

std::vector<Solution> run_batch_serial(std::span<const double> f0, SolverKind solver,
                                       const GaConfig& ga, const SaConfig& sa, int runs,
                                       std::uint64_t master_seed);

}  // namespace tonesearch
