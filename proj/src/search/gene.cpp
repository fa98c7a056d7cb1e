#include "search/gene.h"

#include <cmath>

namespace tonesearch {

double decode_code(std::uint16_t code, ParamRange range) {
  return range.lo + static_cast<double>(code) / 65535.0 * range.width();
}

std::uint16_t encode_code(double value, ParamRange range) {
  const double t = (range.clamp(value) - range.lo) / range.width();
  return static_cast<std::uint16_t>(std::lround(t * 65535.0));
}

namespace {
constexpr Tone kFull[] = {kToneH, kToneL, kToneDownH, kToneDownL, kToneUpH, kToneUpL};
constexpr Tone kNoUpstep[] = {kToneH, kToneL, kToneDownH, kToneDownL};
constexpr Tone kIgbo[] = {kToneH, kToneL, kToneDownH};
}  // namespace

std::span<const Tone> full_alphabet() { return kFull; }
std::span<const Tone> no_upstep_alphabet() { return kNoUpstep; }
std::span<const Tone> igbo_alphabet() { return kIgbo; }

std::span<const Tone> alphabet_for(TableVariant variant, bool allow_upstep) {
  if (variant == TableVariant::Igbo) return igbo_alphabet();
  return allow_upstep ? full_alphabet() : no_upstep_alphabet();
}

Transcription random_transcription(std::size_t n, std::span<const Tone> alphabet, Rng& rng) {
  Transcription t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = alphabet[rng.below(alphabet.size())];
  return t;
}

Gene random_gene(std::size_t n, std::span<const Tone> alphabet, Rng& rng) {
  Gene g;
  g.tones = random_transcription(n, alphabet, rng);
  for (auto& code : g.codes) code = static_cast<std::uint16_t>(rng.next_u64() & 0xFFFF);
  return g;
}

}  // namespace tonesearch
