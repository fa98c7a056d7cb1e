#pragma once

#include <span>

#include "core/errors.h"

namespace tonesearch {

// Benchmark F0 sequences. Trials 1 and 2 are the initial ten values of
// trials 3 and 4, which keeps them clear of the long-utterance asymptote.
inline constexpr double kTrial1[] = {219, 168, 183, 150, 160, 136, 144, 123, 131, 115};
inline constexpr double kTrial2[] = {205, 224, 167, 200, 156, 175, 136, 156, 127, 140};
inline constexpr double kTrial3[] = {219, 168, 183, 150, 160, 136, 144, 123, 131, 115,
                                     122, 107, 113, 105, 118, 100, 113, 95};
inline constexpr double kTrial4[] = {205, 224, 167, 200, 156, 175, 136, 156, 127, 140,
                                     118, 129, 109, 119, 103, 120, 102, 111, 95};

inline std::span<const double> trial_data(int trial) {
  switch (trial) {
    case 1: return kTrial1;
    case 2: return kTrial2;
    case 3: return kTrial3;
    case 4: return kTrial4;
  }
  throw InvalidArgumentError("trial must be 1, 2, 3 or 4");
}

}  // namespace tonesearch
