#include "core/model.h"

#include <cmath>
#include <limits>

#include "core/errors.h"

namespace tonesearch {

RTable RTable::igbo(double f, double big_d) {
  if (!(f > 0.0 && f < 1.0 && big_d > 0.0 && big_d < 1.0)) {
    throw InvalidArgumentError("Igbo table needs F and D in (0,1)");
  }
  RTable t(TableVariant::Igbo);
  t.igbo_f_ = f;
  t.igbo_d_ = big_d;
  return t;
}

double baseline(Tone t, const ScalingParams& p) {
  return t.base == ToneBase::High ? p.h : p.l;
}

namespace {

// Exponent of d for each next-tone column, indexed [step][base] with
// base 0 = H, 1 = L. Rows of the Dschang tables depend only on the
// previous tone's base class.
int dschang1_exponent(ToneBase prev, Tone next) {
  static constexpr int kHighRow[3][2] = {{0, 1}, {1, 2}, {-1, 0}};  // none, down, up
  static constexpr int kLowRow[3][2] = {{-1, 0}, {0, 1}, {-2, -1}};
  const int s = static_cast<int>(next.step);
  const int b = next.base == ToneBase::High ? 0 : 1;
  return prev == ToneBase::High ? kHighRow[s][b] : kLowRow[s][b];
}

int dschang2_exponent(Tone next) {
  switch (next.step) {
    case Step::None: return 0;
    case Step::Down: return 1;
    case Step::Up: return -1;
  }
  return 0;
}

double igbo_ratio(const RTable& table, Tone prev, Tone next) {
  // Rows: {H, !H} and {L}; columns: H, L, !H. Everything else is undefined,
  // including the L -> !H cell itself.
  const bool prev_ok = prev.step == Step::None ||
                       (prev.step == Step::Down && prev.base == ToneBase::High);
  if (!prev_ok || next.step == Step::Up ||
      (next.step == Step::Down && next.base == ToneBase::Low)) {
    throw UndefinedTransitionError("transition " + tone_to_string(prev) + " -> " +
                                   tone_to_string(next) + " undefined in the Igbo table");
  }
  if (next.step == Step::Down) {
    if (prev.base == ToneBase::Low) {
      throw UndefinedTransitionError("transition L -> !H undefined in the Igbo table");
    }
    return table.igbo_d();
  }
  return next.base == ToneBase::High ? 1.0 : table.igbo_f();
}

}  // namespace

double transition_ratio(const RTable& table, Tone prev, Tone next, double d) {
  switch (table.variant()) {
    case TableVariant::Dschang1:
      return std::pow(d, dschang1_exponent(prev.base, next));
    case TableVariant::Dschang2:
      return std::pow(d, dschang2_exponent(next));
    case TableVariant::Igbo:
      return igbo_ratio(table, prev, next);
  }
  return 1.0;
}

double predict_next(Tone prev, Tone next, double x_prev, const ScalingParams& p,
                    const RTable& table) {
  const double r = transition_ratio(table, prev, next, p.d);
  const double nb = baseline(next, p);
  return nb / baseline(prev, p) * r * x_prev + nb * (1.0 - r);
}

double ratio_product(std::span<const Tone> tones, const RTable& table, double d) {
  double product = 1.0;
  for (std::size_t i = 1; i < tones.size(); ++i) {
    product *= transition_ratio(table, tones[i - 1], tones[i], d);
  }
  return product;
}

double predict_seq(std::span<const Tone> tones, double x0, const ScalingParams& p,
                   const RTable& table) {
  if (tones.empty()) throw InvalidArgumentError("predict_seq needs at least one tone");
  const double rt = ratio_product(tones, table, p.d);
  const double nb = baseline(tones.back(), p);
  return nb / baseline(tones.front(), p) * rt * x0 + nb * (1.0 - rt);
}

std::vector<double> generate_contour(std::span<const Tone> tones, double x1,
                                     const ScalingParams& p, const RTable& table) {
  if (tones.empty()) throw InvalidArgumentError("generate_contour needs at least one tone");
  if (!(x1 > 0.0)) throw InvalidArgumentError("initial F0 value must be positive");
  std::vector<double> out;
  out.reserve(tones.size());
  out.push_back(x1);
  for (std::size_t i = 1; i < tones.size(); ++i) {
    out.push_back(predict_next(tones[i - 1], tones[i], out.back(), p, table));
  }
  return out;
}

double evaluate(std::span<const Tone> tones, std::span<const double> f0,
                const ScalingParams& p, const RTable& table) {
  if (tones.size() != f0.size()) {
    throw LengthMismatchError("evaluate requires equally long tone and F0 sequences");
  }
  const std::size_t n = tones.size();
  if (n < 2) throw InvalidArgumentError("evaluate needs at least two values");
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = predict_next(tones[i - 1], tones[i], f0[i - 1], p, table) - f0[i];
    sum += e * e;
  }
  return sum / static_cast<double>(n);
}

double evaluate_or_inf(std::span<const Tone> tones, std::span<const double> f0,
                       const ScalingParams& p, const RTable& table) noexcept {
  try {
    return evaluate(tones, f0, p, table);
  } catch (const UndefinedTransitionError&) {
    return std::numeric_limits<double>::infinity();
  } catch (...) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace tonesearch
