#include "search/exhaustive.h"

#include <cmath>
#include <limits>

#include "core/errors.h"

namespace tonesearch {

namespace {

// Digits of `index` in base |alphabet|, most significant digit first, written
// into `out`.
void index_to_tones(std::uint64_t index, std::span<const Tone> alphabet, Transcription& out) {
  const std::uint64_t base = alphabet.size();
  for (std::size_t pos = out.size(); pos-- > 0;) {
    out[pos] = alphabet[index % base];
    index /= base;
  }
}

std::uint64_t space_size(std::size_t n, std::size_t alphabet_size) {
  constexpr std::uint64_t kCap = 1ULL << 40;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kCap / alphabet_size) {
      throw InvalidArgumentError("exhaustive search space too large");
    }
    total *= alphabet_size;
  }
  return total;
}

struct Best {
  double score = std::numeric_limits<double>::infinity();
  std::uint64_t index = 0;

  // (score, index) lexicographic order makes the winner unique regardless of
  // the order candidates are visited in.
  bool better_than(const Best& other) const {
    return score < other.score || (score == other.score && index < other.index);
  }
};

Best scan_range(std::uint64_t begin, std::uint64_t end, std::span<const double> f0,
                const ScalingParams& params, const RTable& table,
                std::span<const Tone> alphabet) {
  Best best;
  Transcription tones(f0.size());
  for (std::uint64_t i = begin; i < end; ++i) {
    index_to_tones(i, alphabet, tones);
    const double score = evaluate_or_inf(tones, f0, params, table);
    const Best cand{score, i};
    if (cand.better_than(best)) best = cand;
  }
  return best;
}

Solution to_solution(const Best& best, std::span<const double> f0, const ScalingParams& params,
                     std::span<const Tone> alphabet) {
  Solution s;
  s.transcription.resize(f0.size());
  index_to_tones(best.index, alphabet, s.transcription);
  s.params = params;
  s.evaluation = best.score;
  return s;
}

}  // namespace

Solution exhaustive_min_serial(std::span<const double> f0, const ScalingParams& params,
                               const RTable& table, std::span<const Tone> alphabet) {
  if (f0.size() < 2) throw InvalidArgumentError("exhaustive search needs at least two values");
  const std::uint64_t total = space_size(f0.size(), alphabet.size());
  return to_solution(scan_range(0, total, f0, params, table, alphabet), f0, params, alphabet);
}

Solution exhaustive_min(std::span<const double> f0, const ScalingParams& params,
                        const RTable& table, std::span<const Tone> alphabet) {
  if (f0.size() < 2) throw InvalidArgumentError("exhaustive search needs at least two values");
  const std::uint64_t total = space_size(f0.size(), alphabet.size());

#ifdef _OPENMP
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      thread_local Transcription tones;
      tones.resize(f0.size());
      index_to_tones(static_cast<std::uint64_t>(i), alphabet, tones);
      const double score = evaluate_or_inf(tones, f0, params, table);
      const Best cand{score, static_cast<std::uint64_t>(i)};
      if (cand.better_than(local)) local = cand;
    }
#pragma omp critical
    {
      if (local.better_than(best)) best = local;
    }
  }
  return to_solution(best, f0, params, alphabet);
#else
  return to_solution(scan_range(0, total, f0, params, table, alphabet), f0, params, alphabet);
#endif
}

}  // namespace tonesearch
