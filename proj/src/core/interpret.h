#pragma once

#include <span>
#include <vector>

#include "core/rational.h"
#include "core/tone.h"

namespace tonesearch {

/// A numeric interpretation scheme: fixed levels for H and L plus a register
/// that starts at initial_register, moves down_increment lower (numerically
/// higher) at each downstep and up_decrement higher at each upstep.
struct InterpretationScheme {
  Rational level_h;
  Rational level_l;
  Rational initial_register;
  Rational down_increment;
  Rational up_decrement;

  /// H=1, L=3, register from 0, downstep +1.
  static InterpretationScheme hyman();
  /// H=1, L=2, register from 0, downstep +1, upstep -1.
  static InterpretationScheme stewart();
  /// H=1, L=5/2, register from 0, half-unit steps.
  static InterpretationScheme novel();
};

/// Maps a transcription to its row of numeric levels. The register update of
/// a step applies to the tone carrying it; arithmetic is exact.
std::vector<Rational> interpret(std::span<const Tone> tones, const InterpretationScheme& s);

}  // namespace tonesearch
