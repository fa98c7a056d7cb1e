#include "search/sa.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/errors.h"

namespace tonesearch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double term_error(std::span<const Tone> tones, std::span<const double> f0, std::size_t i,
                  const ScalingParams& p, const RTable& table) {
  try {
    const double e = predict_next(tones[i - 1], tones[i], f0[i - 1], p, table) - f0[i];
    return e * e;
  } catch (const UndefinedTransitionError&) {
    return kInf;
  }
}

}  // namespace

std::vector<double> position_scores(std::span<const Tone> tones, std::span<const double> f0,
                                    const ScalingParams& p, const RTable& table) {
  const std::size_t n = tones.size();
  std::vector<double> scores(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double term = term_error(tones, f0, i, p, table);
    scores[i] += term;      // the term predicting position i
    scores[i - 1] += term;  // its predecessor shares the blame
  }
  return scores;
}

SaState perturb(const SaState& s, double t, std::span<const double> f0,
                std::span<const Tone> alphabet, const RTable& table,
                bool params_frozen, Rng& rng) {
  SaState out = s;
  const std::size_t n = s.tones.size();

  // n*t rounds to zero at low temperature; always move at least one tone so
  // the equilibrium loop keeps making proposals.
  const std::size_t k =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * t)));

  std::vector<double> blame = position_scores(s.tones, f0, s.params, table);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return blame[a] > blame[b]; });
  order.resize(std::min(k, n));
  std::sort(order.begin(), order.end());  // resample in position order

  for (std::size_t pos : order) {
    out.tones[pos] = alphabet[rng.below(alphabet.size())];
  }

  if (!params_frozen) {
    const ParamRange ranges[3] = {kRangeH, kRangeL, kRangeD};
    double* fields[3] = {&out.params.h, &out.params.l, &out.params.d};
    for (int idx = 0; idx < 3; ++idx) {
      const double rho = t * ranges[idx].width();
      *fields[idx] = ranges[idx].clamp(*fields[idx] + rng.uniform(-rho, rho));
    }
  }
  return out;
}

bool accept(double delta, double t, double scale, Rng& rng) {
  if (delta < 0.0) return true;
  return std::exp(-delta / (scale * t)) > rng.uniform_open_closed();
}

bool equilibrium_reached(std::span<const bool> accepted_history, int window, int max_accepts) {
  if (accepted_history.size() < static_cast<std::size_t>(window)) return false;
  int accepts = 0;
  for (std::size_t i = accepted_history.size() - static_cast<std::size_t>(window);
       i < accepted_history.size(); ++i) {
    if (accepted_history[i]) ++accepts;
  }
  return accepts <= max_accepts;
}

Solution sa_search(std::span<const double> f0, const SaConfig& cfg,
                   const ExclusionZones* zones, const SaObserver& observer) {
  const std::size_t n = f0.size();
  if (n < 2) throw InvalidArgumentError("sa_search needs at least two F0 values");
  if (!(cfg.cooling_divisor > 1.0)) throw InvalidArgumentError("cooling divisor must exceed 1");
  if (!(cfg.t_floor > 0.0 && cfg.t_floor < cfg.t_start)) {
    throw InvalidArgumentError("temperature floor must lie in (0, t_start)");
  }

  Rng rng(cfg.seed);
  const std::span<const Tone> alphabet = alphabet_for(cfg.table.variant(), cfg.allow_upstep);
  const bool frozen = cfg.frozen_params.has_value();

  auto score = [&](const SaState& s) {
    if (zones != nullptr && zones->contains(s.tones)) return kInf;
    return evaluate_or_inf(s.tones, f0, s.params, cfg.table);
  };

  SaState current;
  current.tones = random_transcription(n, alphabet, rng);
  if (frozen) {
    current.params = *cfg.frozen_params;
  } else {
    current.params.h = rng.uniform(kRangeH.lo, kRangeH.hi);
    current.params.l = rng.uniform(kRangeL.lo, kRangeL.hi);
    current.params.d = rng.uniform(kRangeD.lo, kRangeD.hi);
  }
  current.evaluation = score(current);
  SaState best = current;

  // Ring buffer over the trailing acceptance flags; same rule as
  // equilibrium_reached without keeping the whole history.
  const std::size_t window_size = static_cast<std::size_t>(cfg.equilibrium_window);
  std::vector<bool> ring(window_size, false);

  for (int level = 0;; ++level) {
    // Computed from the level so the sequence is exactly t_start / divisor^m.
    const double t = cfg.t_start / std::pow(cfg.cooling_divisor, level);
    if (!(t > cfg.t_floor)) break;

    std::size_t filled = 0, pos = 0;
    int accepts = 0;
    for (int step = 0; step < cfg.max_steps_per_level; ++step) {
      SaState candidate = perturb(current, t, f0, alphabet, cfg.table, frozen, rng);
      candidate.evaluation = score(candidate);
      const double delta = candidate.evaluation - current.evaluation;
      const bool accepted = accept(delta, t, cfg.energy_scale, rng);
      if (accepted) current = std::move(candidate);
      if (current.evaluation < best.evaluation) best = current;

      if (filled == window_size) {
        accepts -= ring[pos] ? 1 : 0;
      } else {
        ++filled;
      }
      ring[pos] = accepted;
      accepts += accepted ? 1 : 0;
      pos = (pos + 1) % window_size;
      if (filled == window_size && accepts <= cfg.equilibrium_max_accepts) break;
    }
    current = best;
    if (observer) observer(t, best.evaluation);
  }

  Solution s;
  s.transcription = best.tones;
  s.params = best.params;
  s.evaluation = best.evaluation;
  return s;
}

}  // namespace tonesearch
