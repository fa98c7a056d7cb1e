#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cli/f0_file.h"
#include "cli/format.h"
#include "cli/trials.h"
#include "cli/version.h"
#include "core/errors.h"
#include "core/interpret.h"
#include "core/model.h"
#include "core/tone.h"
#include "estimate/regression.h"
#include "search/batch.h"
#include "search/multi.h"

namespace tonesearch {

namespace {

struct TableOptions {
  std::string table = "1";
  double igbo_f = 0.0;
  double igbo_d = 0.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--table", table, "R table variant: 1 (Dschang), 2 (Dschang alt), igbo")
        ->check(CLI::IsMember({"1", "2", "igbo"}))
        ->capture_default_str();
    cmd->add_option("--igbo-f", igbo_f, "Igbo F ratio (required with --table igbo)");
    cmd->add_option("--igbo-d", igbo_d, "Igbo D ratio (required with --table igbo)");
  }

  RTable make() const {
    if (table == "1") return RTable::dschang1();
    if (table == "2") return RTable::dschang2();
    if (igbo_f == 0.0 || igbo_d == 0.0) {
      throw InvalidArgumentError("--table igbo requires --igbo-f and --igbo-d in (0,1)");
    }
    return RTable::igbo(igbo_f, igbo_d);
  }

  void append_argv(std::vector<std::string>& argv) const {
    argv.insert(argv.end(), {"--table", table});
    if (table == "igbo") {
      argv.insert(argv.end(), {"--igbo-f", format_full(igbo_f), "--igbo-d", format_full(igbo_d)});
    }
  }
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& cli_seed) {
  if (cli_seed) return *cli_seed;
  if (const char* env = std::getenv("TONESEARCH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgumentError("TONESEARCH_SEED is not a valid integer");
    }
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void check_params(const ScalingParams& p) {
  if (!(p.h > 0.0) || !(p.l > 0.0)) throw InvalidArgumentError("baselines h and l must be positive");
  if (!(p.d > 0.0 && p.d < 1.0)) throw InvalidArgumentError("d must lie in (0,1)");
}

ScalingParams parse_frozen(const std::string& text) {
  std::istringstream in(text);
  ScalingParams p;
  char c1 = 0, c2 = 0;
  if (!(in >> p.h >> c1 >> p.l >> c2 >> p.d) || c1 != ',' || c2 != ',' || (in >> std::ws, !in.eof())) {
    throw InvalidArgumentError("--freeze-params expects 'h,l,d'");
  }
  check_params(p);
  return p;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateOptions {
  std::string tones;
  double x1 = 0.0;
  double h = 0.0, l = 0.0, d = 0.0;
  TableOptions table;
  bool round_values = false;
  bool machine = false;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  const Transcription t = parse_transcription(o.tones);
  const RTable table = o.table.make();
  ScalingParams p{o.h, o.l, o.d};
  if (table.variant() == TableVariant::Igbo && p.d == 0.0) p.d = 0.5;  // unused by the table
  check_params(p);
  const std::vector<double> contour = generate_contour(t, o.x1, p, table);

  RunManifest manifest;
  manifest.command = "generate";
  manifest.argv = {"generate", "--tones", transcription_to_string(t), "--x1", format_full(o.x1),
                   "--h", format_full(o.h), "--l", format_full(o.l), "--d", format_full(o.d)};
  o.table.append_argv(manifest.argv);
  if (o.round_values) manifest.argv.push_back("--round");
  if (o.machine) manifest.argv.push_back("--machine");

  out << manifest.to_lines();
  if (o.machine) {
    out << "f0:";
    for (double v : contour) out << ' ' << format_full(v);
    out << '\n';
  } else {
    out << format_f0_row(contour, o.round_values) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateOptions {
  std::string tones;
  std::string f0_path;
  double h = 0.0, l = 0.0, d = 0.0;
  TableOptions table;
  bool machine = false;
};

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out) {
  const Transcription t = parse_transcription(o.tones);
  const std::vector<double> f0 = parse_f0_file(o.f0_path);
  const RTable table = o.table.make();
  ScalingParams p{o.h, o.l, o.d};
  if (table.variant() == TableVariant::Igbo && p.d == 0.0) p.d = 0.5;
  check_params(p);
  const double e = evaluate(t, f0, p, table);

  RunManifest manifest;
  manifest.command = "evaluate";
  manifest.argv = {"evaluate", "--tones", transcription_to_string(t), "--f0", o.f0_path,
                   "--h", format_full(o.h), "--l", format_full(o.l), "--d", format_full(o.d)};
  o.table.append_argv(manifest.argv);
  if (o.machine) manifest.argv.push_back("--machine");

  out << manifest.to_lines();
  out << "E: " << (o.machine ? format_full(e) : format_fixed(e, 2)) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// transcribe
// ---------------------------------------------------------------------------

struct TranscribeOptions {
  std::string f0_path;
  std::string solver = "sa";
  int k = 1;
  std::optional<std::uint64_t> seed;
  TableOptions table;
  bool no_upstep = false;
  std::string freeze;
  int population = 100;
  int generations = 300;
  bool round_values = false;
  bool machine = false;
};

int cmd_transcribe(const TranscribeOptions& o, std::ostream& out) {
  const std::vector<double> f0 = parse_f0_file(o.f0_path);
  const RTable table = o.table.make();
  const std::uint64_t seed = resolve_seed(o.seed);

  MultiConfig mc;
  mc.k = o.k;
  mc.solver = o.solver == "ga" ? SolverKind::Ga : SolverKind::Sa;
  mc.ga.seed = seed;
  mc.ga.table = table;
  mc.ga.allow_upstep = !o.no_upstep;
  mc.ga.population = o.population;
  mc.ga.generations = o.generations;
  mc.sa.seed = seed;
  mc.sa.table = table;
  mc.sa.allow_upstep = !o.no_upstep;
  if (!o.freeze.empty()) {
    const ScalingParams frozen = parse_frozen(o.freeze);
    mc.ga.frozen_params = frozen;
    mc.sa.frozen_params = frozen;
  }

  const KBestResult result = k_best(f0, mc);

  RunManifest manifest;
  manifest.command = "transcribe";
  manifest.argv = {"transcribe", "--f0", o.f0_path, "--solver", o.solver,
                   "--k", std::to_string(o.k), "--seed", std::to_string(seed)};
  o.table.append_argv(manifest.argv);
  if (o.no_upstep) manifest.argv.push_back("--no-upstep");
  if (!o.freeze.empty()) {
    const ScalingParams frozen = parse_frozen(o.freeze);
    manifest.argv.insert(manifest.argv.end(),
                         {"--freeze-params", format_full(frozen.h) + "," + format_full(frozen.l) +
                                                 "," + format_full(frozen.d)});
  }
  if (o.solver == "ga") {
    manifest.argv.insert(manifest.argv.end(), {"--population", std::to_string(o.population),
                                               "--generations", std::to_string(o.generations)});
  }
  if (o.round_values) manifest.argv.push_back("--round");
  if (o.machine) manifest.argv.push_back("--machine");

  out << manifest.to_lines();
  const OutputMode mode = o.machine ? OutputMode::Machine : OutputMode::Text;
  out << "solutions: " << result.solutions.size() << '\n';
  for (std::size_t i = 0; i < result.solutions.size(); ++i) {
    if (o.machine) out << "solution: " << i + 1 << '\n';
    out << format_solution(result.solutions[i], mode, table, f0, o.round_values);
  }
  if (result.gave_up && static_cast<int>(result.solutions.size()) < o.k) {
    out << "# gave up after exhausting the space around "
        << result.solutions.size() << " solution(s)\n";
    return kExitGaveUp;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// estimate
// ---------------------------------------------------------------------------

struct EstimateOptions {
  std::string pairs_path;
  bool machine = false;
};

int cmd_estimate(const EstimateOptions& o, std::ostream& out) {
  const std::vector<PairSample> samples = parse_pairs_file(o.pairs_path);

  // Group by tone pair, first-appearance order.
  std::vector<std::pair<Tone, Tone>> keys;
  std::vector<std::vector<PairSample>> groups;
  for (const PairSample& s : samples) {
    std::size_t g = 0;
    for (; g < keys.size(); ++g) {
      if (keys[g].first == s.prev_tone && keys[g].second == s.next_tone) break;
    }
    if (g == keys.size()) {
      keys.emplace_back(s.prev_tone, s.next_tone);
      groups.emplace_back();
    }
    groups[g].push_back(s);
  }

  RunManifest manifest;
  manifest.command = "estimate";
  manifest.argv = {"estimate", "--pairs", o.pairs_path};
  if (o.machine) manifest.argv.push_back("--machine");
  out << manifest.to_lines();

  std::optional<RegressionLine> hl_line, ldh_line;
  for (std::size_t g = 0; g < keys.size(); ++g) {
    const std::string pair_name =
        tone_to_string(keys[g].first) + " " + tone_to_string(keys[g].second);
    if (groups[g].size() < 2) {
      out << "# pair " << pair_name << ": skipped (needs at least 2 samples)\n";
      continue;
    }
    const RegressionLine line = fit_pair_regression(groups[g]);
    if (keys[g].first == kToneH && keys[g].second == kToneL) hl_line = line;
    if (keys[g].first == kToneL && keys[g].second == kToneDownH) ldh_line = line;
    if (o.machine) {
      out << "pair: " << pair_name << '\n'
          << "count: " << line.count << '\n'
          << "gradient: " << format_full(line.gradient) << '\n'
          << "se_gradient: " << format_full(line.se_gradient) << '\n'
          << "intercept: " << format_full(line.intercept) << '\n'
          << "se_intercept: " << format_full(line.se_intercept) << '\n';
    } else {
      out << pair_name << " (" << line.count << "): x_i = " << format_fixed(line.gradient, 3)
          << " x_prev + " << format_fixed(line.intercept, 3) << "   se "
          << format_fixed(line.se_gradient, 3) << ", " << format_fixed(line.se_intercept, 3)
          << '\n';
    }
  }

  if (hl_line && ldh_line) {
    const ScalingParams p = derive_dschang_params(*hl_line, *ldh_line);
    if (o.machine) {
      out << "derived.h: " << format_full(p.h) << '\n'
          << "derived.l: " << format_full(p.l) << '\n'
          << "derived.d: " << format_full(p.d) << '\n';
    } else {
      out << "derived: h:" << format_fixed(p.h, 1) << " l:" << format_fixed(p.l, 1)
          << " d:" << format_fixed(p.d, 3) << '\n';
    }
  } else {
    out << "# derivation needs both H L and L !H pairs\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// interpret / convert
// ---------------------------------------------------------------------------

struct InterpretOptions {
  std::string tones;
  std::string scheme = "hyman";
};

int cmd_interpret(const InterpretOptions& o, std::ostream& out) {
  const Transcription t = parse_transcription(o.tones);
  InterpretationScheme scheme = InterpretationScheme::hyman();
  if (o.scheme == "stewart") scheme = InterpretationScheme::stewart();
  if (o.scheme == "novel") scheme = InterpretationScheme::novel();

  RunManifest manifest;
  manifest.command = "interpret";
  manifest.argv = {"interpret", "--tones", transcription_to_string(t), "--scheme", o.scheme};
  out << manifest.to_lines();

  const std::vector<Rational> levels = interpret(t, scheme);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out << (i > 0 ? " " : "") << levels[i].to_string();
  }
  out << '\n';
  return kExitOk;
}

struct ConvertOptions {
  std::string tones;
  std::string to = "total";
};

int cmd_convert(const ConvertOptions& o, std::ostream& out) {
  const Transcription t = parse_transcription(o.tones);
  const DownstepView view = o.to == "partial" ? DownstepView::Partial : DownstepView::Total;
  const Transcription converted = convert_scheme(t, view);

  RunManifest manifest;
  manifest.command = "convert";
  manifest.argv = {"convert", "--tones", transcription_to_string(t), "--to", o.to};
  out << manifest.to_lines();
  out << transcription_to_string(converted) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchOptions {
  int trial = 1;
  int runs = 100;
  std::string solver = "both";
  std::optional<std::uint64_t> seed;
  bool no_upstep = false;
  int threads = 0;
  bool machine = false;
};

struct HistogramRow {
  int ga_count = 0;
  int sa_count = 0;
  double min_e = std::numeric_limits<double>::infinity();
};

void tally(std::map<std::string, HistogramRow>& rows, const std::vector<Solution>& results,
           std::span<const double> f0, const RTable& table, bool is_sa) {
  for (const Solution& sol : results) {
    const Transcription norm = normalize_initial_step(sol.transcription);
    // Self-check: a reported score must match a fresh evaluation.
    const double check = evaluate(norm, f0, sol.params, table);
    const double tol = 1e-9 * std::max(1.0, std::abs(sol.evaluation));
    if (std::abs(check - sol.evaluation) > tol) {
      throw Error("internal: reported evaluation disagrees with a recomputation");
    }
    HistogramRow& row = rows[transcription_to_string(norm, /*spaced=*/false)];
    (is_sa ? row.sa_count : row.ga_count) += 1;
    row.min_e = std::min(row.min_e, sol.evaluation);
  }
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  const std::span<const double> f0 = trial_data(o.trial);
  const std::uint64_t seed = resolve_seed(o.seed);
  const RTable table = RTable::dschang1();

  GaConfig ga;
  ga.table = table;
  ga.allow_upstep = !o.no_upstep;
  SaConfig sa;
  sa.table = table;
  sa.allow_upstep = !o.no_upstep;

  std::map<std::string, HistogramRow> rows;
  if (o.solver == "ga" || o.solver == "both") {
    tally(rows, run_batch(f0, SolverKind::Ga, ga, sa, o.runs, seed, o.threads), f0, table, false);
  }
  if (o.solver == "sa" || o.solver == "both") {
    tally(rows, run_batch(f0, SolverKind::Sa, ga, sa, o.runs, derive_seed(seed, 0x5A5A5A5AULL),
                          o.threads),
          f0, table, true);
  }

  RunManifest manifest;
  manifest.command = "bench";
  manifest.argv = {"bench", "--trial", std::to_string(o.trial), "--runs", std::to_string(o.runs),
                   "--solver", o.solver, "--seed", std::to_string(seed)};
  if (o.no_upstep) manifest.argv.push_back("--no-upstep");
  if (o.threads > 0) manifest.argv.insert(manifest.argv.end(), {"--threads", std::to_string(o.threads)});
  if (o.machine) manifest.argv.push_back("--machine");
  out << manifest.to_lines();

  // Rows mirror the familiar trial tables: transcriptions found at least
  // twice by one solver with a best score under 7, best-found first.
  std::vector<std::pair<std::string, HistogramRow>> display;
  int other_runs = 0;
  for (const auto& [tones, row] : rows) {
    if (row.min_e < 7.0 && std::max(row.ga_count, row.sa_count) >= 2) {
      display.emplace_back(tones, row);
    } else {
      other_runs += row.ga_count + row.sa_count;
    }
  }
  std::sort(display.begin(), display.end(), [](const auto& a, const auto& b) {
    const int ta = a.second.ga_count + a.second.sa_count;
    const int tb = b.second.ga_count + b.second.sa_count;
    if (ta != tb) return ta > tb;
    return a.first < b.first;
  });

  out << "trial: " << o.trial << '\n' << "runs: " << o.runs << '\n';
  if (o.machine) {
    for (const auto& [tones, row] : display) {
      out << "row: " << tones << " G: " << row.ga_count << " A: " << row.sa_count
          << " minE: " << format_full(row.min_e) << '\n';
    }
    out << "other: " << other_runs << '\n';
  } else {
    out << "transcription  G  A  best E\n";
    for (const auto& [tones, row] : display) {
      out << tones << "  " << row.ga_count << "  " << row.sa_count << "  "
          << format_fixed(row.min_e, 2) << '\n';
    }
    out << "(other results: " << other_runs << " runs)\n";
  }
  return kExitOk;
}

}  // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tone transcription toolkit: forward F0 prediction and inverse search"};
  app.name("tonesearch");
  // --h is a model parameter, so the short help alias must go.
  app.set_help_flag("--help", "print help");
  app.set_version_flag("--version", std::string("tonesearch ") + kToolVersion);
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* c_gen = app.add_subcommand("generate", "Generate an F0 contour from a transcription");
  c_gen->add_option("--tones", gen.tones, "Transcription, e.g. \"H L !H\"")->required();
  c_gen->add_option("--x1", gen.x1, "First F0 value (Hz)")->required();
  c_gen->add_option("--h", gen.h, "H baseline (Hz)")->required();
  c_gen->add_option("--l", gen.l, "L baseline (Hz)")->required();
  c_gen->add_option("--d", gen.d, "downstep ratio");
  gen.table.add_to(c_gen);
  c_gen->add_flag("--round", gen.round_values, "print whole-Hz values");
  c_gen->add_flag("--machine", gen.machine, "machine-readable output");

  EvaluateOptions eval;
  CLI::App* c_eval = app.add_subcommand("evaluate", "Score a transcription against measured F0");
  c_eval->add_option("--tones", eval.tones)->required();
  c_eval->add_option("--f0", eval.f0_path, "F0 value file")->required();
  c_eval->add_option("--h", eval.h)->required();
  c_eval->add_option("--l", eval.l)->required();
  c_eval->add_option("--d", eval.d);
  eval.table.add_to(c_eval);
  c_eval->add_flag("--machine", eval.machine);

  TranscribeOptions tr;
  CLI::App* c_tr = app.add_subcommand("transcribe", "Search tone transcriptions for an F0 file");
  c_tr->add_option("--f0", tr.f0_path, "F0 value file")->required();
  c_tr->add_option("--solver", tr.solver)->check(CLI::IsMember({"sa", "ga"}))->capture_default_str();
  c_tr->add_option("--k", tr.k, "number of diverse solutions")->check(CLI::PositiveNumber)->capture_default_str();
  c_tr->add_option("--seed", tr.seed, "RNG seed (default: $TONESEARCH_SEED or random)");
  tr.table.add_to(c_tr);
  c_tr->add_flag("--no-upstep", tr.no_upstep, "restrict the alphabet to H, L, !H, !L");
  c_tr->add_option("--freeze-params", tr.freeze, "fix h,l,d instead of searching them");
  c_tr->add_option("--population", tr.population, "GA pool size")->capture_default_str();
  c_tr->add_option("--generations", tr.generations, "GA generations")->capture_default_str();
  c_tr->add_flag("--round", tr.round_values);
  c_tr->add_flag("--machine", tr.machine);

  EstimateOptions est;
  CLI::App* c_est = app.add_subcommand("estimate", "Fit per-pair regressions and derive h, l, d");
  c_est->add_option("--pairs", est.pairs_path, "sample file: <prev> <next> <x_prev> <x_next>")
      ->required();
  c_est->add_flag("--machine", est.machine);

  InterpretOptions interp;
  CLI::App* c_interp = app.add_subcommand("interpret", "Numeric levels under a scheme");
  c_interp->add_option("--tones", interp.tones)->required();
  c_interp->add_option("--scheme", interp.scheme)
      ->check(CLI::IsMember({"hyman", "stewart", "novel"}))
      ->capture_default_str();

  ConvertOptions conv;
  CLI::App* c_conv = app.add_subcommand("convert", "Convert between downstep conventions");
  c_conv->add_option("--tones", conv.tones)->required();
  c_conv->add_option("--to", conv.to)->check(CLI::IsMember({"partial", "total"}))->required();

  BenchOptions bench;
  CLI::App* c_bench = app.add_subcommand("bench", "Reproduce the trial histograms");
  c_bench->add_option("--trial", bench.trial)->check(CLI::Range(1, 4))->capture_default_str();
  c_bench->add_option("--runs", bench.runs)->check(CLI::PositiveNumber)->capture_default_str();
  c_bench->add_option("--solver", bench.solver)
      ->check(CLI::IsMember({"ga", "sa", "both"}))
      ->capture_default_str();
  c_bench->add_option("--seed", bench.seed);
  c_bench->add_flag("--no-upstep", bench.no_upstep);
  c_bench->add_option("--threads", bench.threads, "worker threads (0 = library default)");
  c_bench->add_flag("--machine", bench.machine);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->set_help_flag("--help", "print help");
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_gen)) return cmd_generate(gen, out);
    if (app.got_subcommand(c_eval)) return cmd_evaluate(eval, out);
    if (app.got_subcommand(c_tr)) return cmd_transcribe(tr, out);
    if (app.got_subcommand(c_est)) return cmd_estimate(est, out);
    if (app.got_subcommand(c_interp)) return cmd_interpret(interp, out);
    if (app.got_subcommand(c_conv)) return cmd_convert(conv, out);
    if (app.got_subcommand(c_bench)) return cmd_bench(bench, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  err << "usage error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace tonesearch
