#pragma once

#include <cstdint>
#include <span>

#include "core/model.h"
#include "core/tone.h"

namespace tonesearch {

/// Ground-truth minimum over every tone string of length |f0| with fixed
/// scaling parameters. Ties break toward the lexicographically first string
/// in alphabet order, so the result is independent of evaluation order.
/// Feasible only for small n: the space has |alphabet|^n strings (capped at
/// 2^40; larger requests throw InvalidArgumentError).
///
/// `exhaustive_min` splits the index space across OpenMP threads when
/// OpenMP is enabled; `exhaustive_min_serial` is the single-threaded
/// reference, kept for testing and benchmarking. Both return identical
/// results.
Solution exhaustive_min(std::span<const double> f0, const ScalingParams& params,
                        const RTable& table, std::span<const Tone> alphabet);

Solution exhaustive_min_serial(std::span<const double> f0, const ScalingParams& params,
                               const RTable& table, std::span<const Tone> alphabet);

}  // namespace tonesearch
