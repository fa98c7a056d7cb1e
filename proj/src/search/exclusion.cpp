#include "search/exclusion.h"

#include "core/errors.h"

namespace tonesearch {

bool excluded(std::span<const Tone> t, std::span<const Transcription> found, std::size_t n) {
  if (t.size() != n) throw LengthMismatchError("excluded: transcription length mismatch");
  Transcription normalized(t.begin(), t.end());
  normalized = normalize_initial_step(std::move(normalized));
  for (const Transcription& s : found) {
    if (s.size() != n) throw LengthMismatchError("excluded: stored solution length mismatch");
    const Transcription s_norm = normalize_initial_step(s);
    // Integer form of "within distance n/3".
    if (3 * distance(normalized, s_norm) <= n) return true;
  }
  return false;
}

}  // namespace tonesearch
