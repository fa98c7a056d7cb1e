#pragma once

#include <span>
#include <vector>

#include "core/tone.h"

namespace tonesearch {

/// The continuous half of a solution: the H and L baselines (Hz) and the
/// downstep ratio d.
struct ScalingParams {
  double h = 0.0;
  double l = 0.0;
  double d = 0.0;

  friend bool operator==(const ScalingParams&, const ScalingParams&) = default;
};

struct ParamRange {
  double lo;
  double hi;

  double clamp(double v) const { return v < lo ? lo : (v > hi ? hi : v); }
  bool contains(double v) const { return v >= lo && v <= hi; }
  double width() const { return hi - lo; }
};

/// Ranges the searches confine h, l and d to.
inline constexpr ParamRange kRangeH{90.0, 110.0};
inline constexpr ParamRange kRangeL{70.0, 100.0};
inline constexpr ParamRange kRangeD{0.6, 0.9};

inline bool in_gene_ranges(const ScalingParams& p) {
  return kRangeH.contains(p.h) && kRangeL.contains(p.l) && kRangeD.contains(p.d);
}

enum class TableVariant : uint8_t { Dschang1, Dschang2, Igbo };

/// Transition-ratio table. The two Dschang variants are functions of d; the
/// Igbo table instead carries its own fixed ratios F and D and leaves several
/// transitions undefined.
class RTable {
 public:
  static RTable dschang1() { return RTable(TableVariant::Dschang1); }
  static RTable dschang2() { return RTable(TableVariant::Dschang2); }
  static RTable igbo(double f, double big_d);

  TableVariant variant() const { return variant_; }
  double igbo_f() const { return igbo_f_; }
  double igbo_d() const { return igbo_d_; }

 private:
  explicit RTable(TableVariant v) : variant_(v) {}

  TableVariant variant_;
  double igbo_f_ = 0.0;
  double igbo_d_ = 0.0;
};

/// The baseline (asymptote) a tone decays toward: h for H-based tones, l for
/// L-based tones. The register step is irrelevant here.
double baseline(Tone t, const ScalingParams& p);

/// The tabulated transition ratio for prev -> next, evaluated at d (Dschang)
/// or read from F/D (Igbo). Throws UndefinedTransitionError where the table
/// has no entry.
double transition_ratio(const RTable& table, Tone prev, Tone next, double d);

/// One step of the prediction function:
///   x_i = (nb/pb) * R * x_prev + nb * (1 - R)
/// with pb, nb the baselines of prev and next.
double predict_next(Tone prev, Tone next, double x_prev, const ScalingParams& p,
                    const RTable& table);

/// Product of the transition ratios along a transcription; 1 for a single
/// tone.
double ratio_product(std::span<const Tone> tones, const RTable& table, double d);

/// Closed form for the F0 value of the last tone given the first one's value:
///   (last_baseline/first_baseline) * R_T * x0 + last_baseline * (1 - R_T).
/// Equals the left fold of predict_next up to rounding.
double predict_seq(std::span<const Tone> tones, double x0, const ScalingParams& p,
                   const RTable& table);

/// Generates an F0 contour: the first value is x1 verbatim, each further
/// value is predicted from its predecessor.
std::vector<double> generate_contour(std::span<const Tone> tones, double x1,
                                     const ScalingParams& p, const RTable& table);

/// Mean squared prediction error of a transcription against observed F0
/// values; the first value is never predicted and the divisor is exactly n.
/// Throws LengthMismatchError; requires n >= 2.
double evaluate(std::span<const Tone> tones, std::span<const double> f0,
                const ScalingParams& p, const RTable& table);

/// Like evaluate, but maps undefined transitions to +infinity instead of
/// throwing. Search code treats such candidates as unusable.
double evaluate_or_inf(std::span<const Tone> tones, std::span<const double> f0,
                       const ScalingParams& p, const RTable& table) noexcept;

/// A transcription, its scaling parameters and its evaluation against the F0
/// sequence it was searched on.
struct Solution {
  Transcription transcription;
  ScalingParams params;
  double evaluation = 0.0;
};

}  // namespace tonesearch
