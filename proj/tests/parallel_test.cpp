#include <doctest.h>

#include "core/rng.h"
#include "search/batch.h"
#include "search/exhaustive.h"

using namespace tonesearch;

namespace {

// Independent odometer enumeration used to cross-check the library's
// exhaustive scan on small spaces.
Solution brute_force_reference(std::span<const double> f0, const ScalingParams& p,
                               const RTable& table, std::span<const Tone> alphabet) {
  const std::size_t n = f0.size();
  std::vector<std::size_t> digits(n, 0);
  Transcription tones(n, alphabet[0]);
  Solution best;
  best.evaluation = std::numeric_limits<double>::infinity();
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) tones[i] = alphabet[digits[i]];
    const double e = evaluate_or_inf(tones, f0, p, table);
    if (e < best.evaluation) {
      best.transcription = tones;
      best.evaluation = e;
      best.params = p;
    }
    // Advance the odometer, least significant digit last.
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++digits[pos] < alphabet.size()) break;
      digits[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

}  // namespace

TEST_CASE("exhaustive scan agrees with an independent enumeration") {
  Rng rng(11);
  const RTable table = RTable::dschang1();
  const auto alphabet = full_alphabet();
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng.below(3);  // 2..4
    const ScalingParams p{rng.uniform(92, 108), rng.uniform(72, 98), rng.uniform(0.62, 0.88)};
    const Transcription truth = random_transcription(n, alphabet, rng);
    const auto x = generate_contour(truth, rng.uniform(120, 230), p, table);

    const Solution reference = brute_force_reference(x, p, table, alphabet);
    const Solution serial = exhaustive_min_serial(x, p, table, alphabet);
    CHECK(serial.evaluation == reference.evaluation);
    CHECK(serial.transcription == reference.transcription);
    CHECK(serial.evaluation == 0.0);  // the generating string is in the space
  }
}

TEST_CASE("parallel exhaustive scan equals the serial reference") {
  Rng rng(13);
  const RTable table = RTable::dschang1();
  const auto alphabet = full_alphabet();
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 4 + rng.below(3);  // 4..6
    const ScalingParams p{rng.uniform(92, 108), rng.uniform(72, 98), rng.uniform(0.62, 0.88)};
    const Transcription truth = random_transcription(n, alphabet, rng);
    const auto x = generate_contour(truth, rng.uniform(120, 230), p, table);

    const Solution serial = exhaustive_min_serial(x, p, table, alphabet);
    const Solution parallel = exhaustive_min(x, p, table, alphabet);
    CHECK(parallel.evaluation == serial.evaluation);
    CHECK(parallel.transcription == serial.transcription);
  }
}

TEST_CASE("tie-breaking is order independent") {
  // h == l makes whole families of strings score identically; the winner
  // must still be the lexicographically first index.
  const std::vector<double> x = {100, 100, 100, 100};
  const ScalingParams p{100, 100, 0.7};
  const RTable table = RTable::dschang1();
  const Solution serial = exhaustive_min_serial(x, p, table, full_alphabet());
  const Solution parallel = exhaustive_min(x, p, table, full_alphabet());
  CHECK(serial.transcription == parallel.transcription);
  CHECK(serial.evaluation == parallel.evaluation);
  CHECK(serial.transcription == parse_transcription("H H H H"));
}

TEST_CASE("batch runs are identical serial, parallel, and across thread counts") {
  const auto x = generate_contour(parse_transcription("H L !H L !H L"), 200.0,
                                  ScalingParams{100, 85, 0.7}, RTable::dschang1());
  GaConfig ga;
  ga.population = 30;
  ga.generations = 30;
  SaConfig sa;

  for (SolverKind kind : {SolverKind::Sa, SolverKind::Ga}) {
    const auto serial = run_batch_serial(x, kind, ga, sa, 12, 777);
    const auto threads1 = run_batch(x, kind, ga, sa, 12, 777, 1);
    const auto threads4 = run_batch(x, kind, ga, sa, 12, 777, 4);
    const auto default_threads = run_batch(x, kind, ga, sa, 12, 777);
    REQUIRE(serial.size() == 12);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].transcription == threads1[i].transcription);
      CHECK(serial[i].transcription == threads4[i].transcription);
      CHECK(serial[i].transcription == default_threads[i].transcription);
      CHECK(serial[i].evaluation == threads1[i].evaluation);
      CHECK(serial[i].evaluation == threads4[i].evaluation);
      CHECK(serial[i].evaluation == default_threads[i].evaluation);
      CHECK(serial[i].params == threads4[i].params);
    }
  }
}
