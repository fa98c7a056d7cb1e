#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "core/model.h"
#include "core/rng.h"
#include "core/tone.h"

namespace tonesearch {

/// Linear encoding of a candidate solution: the tone string plus 16-bit
/// fixed-point codes for h, l and d. code 0 maps to the range's low end,
/// 0xFFFF to its high end.
struct Gene {
  Transcription tones;
  std::array<std::uint16_t, 3> codes{};  // h, l, d
};

double decode_code(std::uint16_t code, ParamRange range);
std::uint16_t encode_code(double value, ParamRange range);

/// Decodes parameter codes, or substitutes fixed values when the search runs
/// with frozen parameters (frozen values need not sit on the 16-bit grid).
class ParamCodec {
 public:
  explicit ParamCodec(std::optional<ScalingParams> frozen = std::nullopt)
      : frozen_(frozen) {}

  bool frozen() const { return frozen_.has_value(); }

  ScalingParams decode(const Gene& g) const {
    if (frozen_) return *frozen_;
    return ScalingParams{decode_code(g.codes[0], kRangeH), decode_code(g.codes[1], kRangeL),
                         decode_code(g.codes[2], kRangeD)};
  }

 private:
  std::optional<ScalingParams> frozen_;
};

/// Tone alphabets the searches draw from.
std::span<const Tone> full_alphabet();      // H, L, !H, !L, ^H, ^L
std::span<const Tone> no_upstep_alphabet(); // H, L, !H, !L
std::span<const Tone> igbo_alphabet();      // H, L, !H

/// Alphabet for a table variant, honoring the upstep switch (ignored for
/// Igbo, whose table has no upstep columns at all).
std::span<const Tone> alphabet_for(TableVariant variant, bool allow_upstep);

Transcription random_transcription(std::size_t n, std::span<const Tone> alphabet, Rng& rng);
Gene random_gene(std::size_t n, std::span<const Tone> alphabet, Rng& rng);

}  // namespace tonesearch
