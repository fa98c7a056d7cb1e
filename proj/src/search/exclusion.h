#pragma once

#include <span>
#include <vector>

#include "core/tone.h"

namespace tonesearch {

/// True if T lies within distance n/3 of any member of `found`, i.e.
/// 3 * distance(T, S) <= n for some S. Both sides are compared after
/// initial-step normalization. All transcriptions must have length n.
bool excluded(std::span<const Tone> t, std::span<const Transcription> found, std::size_t n);

/// The set of already-reported transcriptions a k-best run must stay away
/// from. Stores normalized forms.
class ExclusionZones {
 public:
  explicit ExclusionZones(std::size_t n) : n_(n) {}

  void add(const Transcription& t) { found_.push_back(normalize_initial_step(t)); }
  bool contains(std::span<const Tone> t) const { return excluded(t, found_, n_); }
  bool empty() const { return found_.empty(); }

 private:
  std::size_t n_;
  std::vector<Transcription> found_;
};

}  // namespace tonesearch
