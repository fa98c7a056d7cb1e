#include "core/tone.h"

#include <cctype>

#include "core/errors.h"

namespace tonesearch {

std::string tone_to_string(Tone t) {
  std::string out;
  if (t.step == Step::Down) out += '!';
  if (t.step == Step::Up) out += '^';
  out += (t.base == ToneBase::High) ? 'H' : 'L';
  return out;
}

namespace {

// Consumes one step marker if present: '!', '^', or the UTF-8 arrows
// U+2193 / U+2191. Returns the number of bytes consumed.
std::size_t match_step(std::string_view s, Step& step) {
  if (s.empty()) return 0;
  if (s[0] == '!') {
    step = Step::Down;
    return 1;
  }
  if (s[0] == '^') {
    step = Step::Up;
    return 1;
  }
  if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE2 &&
      static_cast<unsigned char>(s[1]) == 0x86) {
    if (static_cast<unsigned char>(s[2]) == 0x93) {
      step = Step::Down;
      return 3;
    }
    if (static_cast<unsigned char>(s[2]) == 0x91) {
      step = Step::Up;
      return 3;
    }
  }
  return 0;
}

}  // namespace

Transcription parse_transcription(std::string_view text) {
  Transcription out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Tone tone;
    i += match_step(text.substr(i), tone.step);
    if (i >= text.size()) {
      throw ParseError("dangling step marker at end of transcription", 1);
    }
    char c = text[i];
    if (c == 'H' || c == 'h') {
      tone.base = ToneBase::High;
    } else if (c == 'L' || c == 'l') {
      tone.base = ToneBase::Low;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in transcription", 1);
    }
    ++i;
    out.push_back(tone);
  }
  if (out.empty()) throw ParseError("empty transcription", 1);
  return out;
}

std::string transcription_to_string(std::span<const Tone> tones, bool spaced) {
  std::string out;
  for (std::size_t i = 0; i < tones.size(); ++i) {
    if (spaced && i > 0) out += ' ';
    out += tone_to_string(tones[i]);
  }
  return out;
}

std::size_t distance(std::span<const Tone> a, std::span<const Tone> b) {
  if (a.size() != b.size()) {
    throw LengthMismatchError("distance requires transcriptions of equal length");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) ++count;
  }
  return count;
}

Transcription normalize_initial_step(Transcription t) {
  if (!t.empty()) t[0].step = Step::None;
  return t;
}

namespace {

// Pairwise mapping between the partial- and total-downstep conventions,
// keyed on (previous tone's base, current tone). Rows with no counterpart
// in the other convention are absent and raise an error.
bool map_pair(ToneBase prev, Tone cur, DownstepView to, Tone& out) {
  out.base = cur.base;
  const bool prev_high = prev == ToneBase::High;
  const bool cur_high = cur.base == ToneBase::High;
  if (to == DownstepView::Total) {
    // partial -> total
    switch (cur.step) {
      case Step::None:
        // HL -> H!L, LH -> L^H; HH and LL unchanged
        out.step = (prev_high == cur_high) ? Step::None : (cur_high ? Step::Up : Step::Down);
        return true;
      case Step::Down:
        if (prev_high && cur_high) { out.step = Step::Down; return true; }   // H!H
        if (!prev_high && cur_high) { out.step = Step::None; return true; }  // L!H -> LH
        if (!prev_high && !cur_high) { out.step = Step::Down; return true; } // L!L
        return false;                                                        // H!L has no source
      case Step::Up:
        if (prev_high && cur_high) { out.step = Step::Up; return true; }     // H^H
        if (prev_high && !cur_high) { out.step = Step::None; return true; }  // H^L -> HL
        if (!prev_high && !cur_high) { out.step = Step::Up; return true; }   // L^L
        return false;                                                        // L^H has no source
    }
  } else {
    // total -> partial
    switch (cur.step) {
      case Step::None:
        // LH -> L!H, HL -> H^L; HH and LL unchanged
        out.step = (prev_high == cur_high) ? Step::None : (cur_high ? Step::Down : Step::Up);
        return true;
      case Step::Down:
        if (prev_high && cur_high) { out.step = Step::Down; return true; }   // H!H
        if (prev_high && !cur_high) { out.step = Step::None; return true; }  // H!L -> HL
        if (!prev_high && !cur_high) { out.step = Step::Down; return true; } // L!L
        return false;                                                        // L!H is partial-only
      case Step::Up:
        if (prev_high && cur_high) { out.step = Step::Up; return true; }     // H^H
        if (!prev_high && cur_high) { out.step = Step::None; return true; }  // L^H -> LH
        if (!prev_high && !cur_high) { out.step = Step::Up; return true; }   // L^L
        return false;                                                        // H^L is partial-only
    }
  }
  return false;
}

}  // namespace

Transcription convert_scheme(const Transcription& t, DownstepView to) {
  Transcription in = normalize_initial_step(t);
  Transcription out;
  out.reserve(in.size());
  out.push_back(in[0]);
  for (std::size_t i = 1; i < in.size(); ++i) {
    Tone mapped;
    if (!map_pair(in[i - 1].base, in[i], to, mapped)) {
      throw UndefinedTransitionError("tone pair " + tone_to_string(in[i - 1]) + " " +
                                     tone_to_string(in[i]) +
                                     " has no counterpart in the target convention");
    }
    out.push_back(mapped);
  }
  return out;
}

}  // namespace tonesearch
