#include "search/ga.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.h"

namespace tonesearch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Squared error the transition (prev -> cand) contributes at position i,
// infinite when the table leaves it undefined.
double local_error(Tone prev, Tone cand, double x_prev, double x_obs,
                   const ScalingParams& p, const RTable& table) {
  try {
    const double e = predict_next(prev, cand, x_prev, p, table) - x_obs;
    return e * e;
  } catch (const UndefinedTransitionError&) {
    return kInf;
  }
}

double score_gene(const Gene& g, std::span<const double> f0, const ParamCodec& codec,
                  const RTable& table, const ExclusionZones* zones) {
  if (zones != nullptr && zones->contains(g.tones)) return kInf;
  return evaluate_or_inf(g.tones, f0, codec.decode(g), table);
}

}  // namespace

std::uint16_t splice_code(std::uint16_t first, std::uint16_t second, int cut) {
  const std::uint16_t low_mask =
      cut >= 16 ? 0 : static_cast<std::uint16_t>((1u << (16 - cut)) - 1u);
  return static_cast<std::uint16_t>((first & ~low_mask) | (second & low_mask));
}

Gene crossover(const Gene& a, const Gene& b, std::span<const double> f0,
               const RTable& table, const ParamCodec& codec, Rng& rng) {
  if (a.tones.size() != b.tones.size() || a.tones.size() != f0.size()) {
    throw LengthMismatchError("crossover requires equal-length genes and F0 sequence");
  }
  Gene child;

  if (codec.frozen()) {
    child.codes = a.codes;
  } else {
    for (int k = 0; k < 3; ++k) {
      const int cut = static_cast<int>(rng.below(17));  // 0..16
      const bool a_first = rng.chance(0.5);
      child.codes[k] = a_first ? splice_code(a.codes[k], b.codes[k], cut)
                               : splice_code(b.codes[k], a.codes[k], cut);
    }
  }
  const ScalingParams p = codec.decode(child);

  const std::size_t n = a.tones.size();
  child.tones.resize(n);
  child.tones[0] = a.tones[0];
  for (std::size_t i = 1; i < n; ++i) {
    const Tone prev = child.tones[i - 1];
    const double err_a = local_error(prev, a.tones[i], f0[i - 1], f0[i], p, table);
    const double err_b = local_error(prev, b.tones[i], f0[i - 1], f0[i], p, table);
    child.tones[i] = err_b < err_a ? b.tones[i] : a.tones[i];
  }
  return child;
}

void mutate(Gene& g, double rate, std::span<const Tone> alphabet, const ParamCodec& codec,
            Rng& rng) {
  for (Tone& t : g.tones) {
    if (rng.chance(rate)) t = alphabet[rng.below(alphabet.size())];
  }
  if (codec.frozen()) return;
  for (auto& code : g.codes) {
    for (int bit = 0; bit < 16; ++bit) {
      if (rng.chance(rate)) code = static_cast<std::uint16_t>(code ^ (1u << bit));
    }
  }
}

std::size_t best_of_three(std::span<const double> scores, Rng& rng) {
  const std::size_t pool = scores.size();
  if (pool < 3) throw InvalidArgumentError("best_of_three needs a pool of at least 3");

  // Three distinct indices without replacement.
  std::size_t picks[3];
  picks[0] = rng.below(pool);
  picks[1] = rng.below(pool - 1);
  if (picks[1] >= picks[0]) ++picks[1];
  picks[2] = rng.below(pool - 2);
  const std::size_t lo = std::min(picks[0], picks[1]);
  const std::size_t hi = std::max(picks[0], picks[1]);
  if (picks[2] >= lo) ++picks[2];
  if (picks[2] >= hi) ++picks[2];

  std::size_t best = picks[0];
  for (int k = 1; k < 3; ++k) {
    if (scores[picks[k]] < scores[best]) best = picks[k];
  }
  return best;
}

Solution ga_search(std::span<const double> f0, const GaConfig& cfg,
                   const ExclusionZones* zones, const GaObserver& observer) {
  const std::size_t n = f0.size();
  if (n < 2) throw InvalidArgumentError("ga_search needs at least two F0 values");
  if (cfg.population < 2) throw InvalidArgumentError("population must be at least 2");

  Rng rng(cfg.seed);
  const ParamCodec codec(cfg.frozen_params);
  const std::span<const Tone> alphabet = alphabet_for(cfg.table.variant(), cfg.allow_upstep);

  std::vector<Gene> pool(cfg.population);
  std::vector<double> scores(cfg.population);
  for (int i = 0; i < cfg.population; ++i) {
    pool[i] = random_gene(n, alphabet, rng);
    scores[i] = score_gene(pool[i], f0, codec, cfg.table, zones);
  }

  auto best_index = [&]() {
    return static_cast<std::size_t>(
        std::min_element(scores.begin(), scores.end()) - scores.begin());
  };

  std::vector<double> best_history;
  best_history.push_back(scores[best_index()]);

  std::vector<Gene> next_pool(cfg.population);
  std::vector<double> next_scores(cfg.population);
  for (int g = 1; g <= cfg.generations; ++g) {
    // Stagnation rule: no strict improvement over the score of
    // stagnation_window generations ago spikes the mutation rate for this
    // generation only.
    double rate = cfg.base_mutation_rate;
    const int latest = static_cast<int>(best_history.size()) - 1;
    if (latest >= cfg.stagnation_window &&
        !(best_history[latest] < best_history[latest - cfg.stagnation_window])) {
      rate = cfg.spike_mutation_rate;
    }

    const std::size_t elite = best_index();
    next_pool[0] = pool[elite];
    next_scores[0] = scores[elite];
    for (int i = 1; i < cfg.population; ++i) {
      const Gene& p1 = pool[best_of_three(scores, rng)];
      const Gene& p2 = pool[best_of_three(scores, rng)];
      Gene child = crossover(p1, p2, f0, cfg.table, codec, rng);
      mutate(child, rate, alphabet, codec, rng);
      next_scores[i] = score_gene(child, f0, codec, cfg.table, zones);
      next_pool[i] = std::move(child);
    }
    pool.swap(next_pool);
    scores.swap(next_scores);

    best_history.push_back(scores[best_index()]);
    if (observer) observer(g, best_history.back(), rate);
  }

  const std::size_t winner = best_index();
  Solution s;
  s.transcription = pool[winner].tones;
  s.params = codec.decode(pool[winner]);
  s.evaluation = scores[winner];
  return s;
}

}  // namespace tonesearch
