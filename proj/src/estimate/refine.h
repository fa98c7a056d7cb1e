#pragma once

#include <span>

#include "core/model.h"

namespace tonesearch {

struct RefineOptions {
  int max_cycles = 100;        ///< full (h, l, d) sweeps
  double tolerance = 1e-12;    ///< stop once a sweep improves the score by less
};

/// Deterministic local optimization of h, l, d for a fixed transcription:
/// cyclic coordinate descent, each coordinate minimized by golden-section
/// search over its gene range. The returned parameters never score worse
/// than `start` and always lie inside the gene ranges.
/// Requires |tones| == |f0| and `start` inside the gene ranges.
ScalingParams refine_params(std::span<const Tone> tones, std::span<const double> f0,
                            const RTable& table, const ScalingParams& start,
                            const RefineOptions& opts = {});

}  // namespace tonesearch
