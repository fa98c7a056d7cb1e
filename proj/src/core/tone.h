#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tonesearch {

enum class ToneBase : uint8_t { High, Low };

/// Register step attached to a tone: none, downstep (!) or upstep (^).
enum class Step : uint8_t { None, Down, Up };

struct Tone {
  ToneBase base = ToneBase::High;
  Step step = Step::None;

  friend bool operator==(const Tone&, const Tone&) = default;
};

inline constexpr Tone kToneH{ToneBase::High, Step::None};
inline constexpr Tone kToneL{ToneBase::Low, Step::None};
inline constexpr Tone kToneDownH{ToneBase::High, Step::Down};
inline constexpr Tone kToneDownL{ToneBase::Low, Step::Down};
inline constexpr Tone kToneUpH{ToneBase::High, Step::Up};
inline constexpr Tone kToneUpL{ToneBase::Low, Step::Up};

/// An ordered, non-empty sequence of tones.
using Transcription = std::vector<Tone>;

/// ASCII form of one tone: H, L, !H, !L, ^H, ^L.
std::string tone_to_string(Tone t);

/// Parses a transcription. Tokens may be separated by whitespace or run
/// together ("H L !H" and "HL!H" are the same sequence). The Unicode arrows
/// for downstep and upstep are accepted as synonyms of '!' and '^'.
/// Throws ParseError on anything else or on an empty string.
Transcription parse_transcription(std::string_view text);

/// Renders a transcription; `spaced` selects "H L !H" vs "HL!H".
std::string transcription_to_string(std::span<const Tone> tones, bool spaced = true);

/// Number of positions at which the two transcriptions differ (whole-tone
/// comparison, base and step both count). Throws LengthMismatchError.
std::size_t distance(std::span<const Tone> a, std::span<const Tone> b);

/// Returns a copy with the first tone's step cleared. An initial step has no
/// effect on phonetic interpretation, so transcriptions are compared in this
/// form. Idempotent.
Transcription normalize_initial_step(Transcription t);

/// The two conventions for how far a downstepped tone falls.
enum class DownstepView : uint8_t { Partial, Total };

/// Rewrites a transcription from one downstep convention to the other by
/// adding and deleting steps; bases are never changed. Works pairwise
/// left-to-right after initial-step normalization. Throws
/// UndefinedTransitionError on a pair with no counterpart in the target
/// convention.
Transcription convert_scheme(const Transcription& t, DownstepView to);

}  // namespace tonesearch
