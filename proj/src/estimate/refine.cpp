#include "estimate/refine.h"

#include <cmath>

#include "core/errors.h"

namespace tonesearch {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/phi

// Golden-section minimum of f over [lo, hi]; f need not be evaluated at the
// current point. Deterministic fixed iteration count.
template <typename F>
double golden_section_min(F&& f, double lo, double hi) {
  double a = lo, b = hi;
  double c = b - (b - a) * kInvPhi;
  double d = a + (b - a) * kInvPhi;
  double fc = f(c), fd = f(d);
  for (int iter = 0; iter < 80 && (b - a) > 1e-13 * (hi - lo); ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

ScalingParams refine_params(std::span<const Tone> tones, std::span<const double> f0,
                            const RTable& table, const ScalingParams& start,
                            const RefineOptions& opts) {
  if (tones.size() != f0.size()) {
    throw LengthMismatchError("refine_params requires equal-length sequences");
  }
  if (!in_gene_ranges(start)) {
    throw InvalidArgumentError("refine_params start must lie inside the gene ranges");
  }

  ScalingParams cur = start;
  double cur_score = evaluate(tones, f0, cur, table);

  const ParamRange ranges[3] = {kRangeH, kRangeL, kRangeD};
  for (int cycle = 0; cycle < opts.max_cycles; ++cycle) {
    const double score_before = cur_score;
    for (int axis = 0; axis < 3; ++axis) {
      auto with_axis = [&](double v) {
        ScalingParams p = cur;
        (axis == 0 ? p.h : axis == 1 ? p.l : p.d) = v;
        return p;
      };
      const double best_v = golden_section_min(
          [&](double v) { return evaluate(tones, f0, with_axis(v), table); },
          ranges[axis].lo, ranges[axis].hi);
      const ScalingParams candidate = with_axis(best_v);
      const double candidate_score = evaluate(tones, f0, candidate, table);
      // Only ever move downhill; golden section can miss on a multimodal
      // slice, in which case the old coordinate stays.
      if (candidate_score < cur_score) {
        cur = candidate;
        cur_score = candidate_score;
      }
    }
    if (score_before - cur_score < opts.tolerance) break;
  }
  return cur;
}

}  // namespace tonesearch
