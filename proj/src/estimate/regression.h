#pragma once

#include <span>

#include "core/model.h"
#include "core/tone.h"

namespace tonesearch {

/// One measured transition: the tone pair and the two F0 values.
struct PairSample {
  Tone prev_tone;
  Tone next_tone;
  double x_prev = 0.0;
  double x_next = 0.0;
};

/// Ordinary-least-squares line for x_next regressed on x_prev, with the
/// classical standard errors (residual variance divisor count - 2).
struct RegressionLine {
  double gradient = 0.0;
  double intercept = 0.0;
  double se_gradient = 0.0;
  double se_intercept = 0.0;
  int count = 0;
};

/// Fits x_next = gradient * x_prev + intercept over samples of a single tone
/// pair. Throws DegenerateInputError on fewer than 2 samples or when every
/// x_prev is identical.
RegressionLine fit_pair_regression(std::span<const PairSample> samples);

/// Recovers the Dschang scaling parameters from the HL and L!H regression
/// lines, taking the L!H ratio as 1:
///   h/l = ldh.gradient,  d = hl.gradient * ldh.gradient,
///   l = hl.intercept / (1 - d),  h = l * ldh.gradient.
/// Throws InconsistencyError when d falls outside (0,1) or a baseline comes
/// out nonpositive.
ScalingParams derive_dschang_params(const RegressionLine& hl, const RegressionLine& ldh);

}  // namespace tonesearch
