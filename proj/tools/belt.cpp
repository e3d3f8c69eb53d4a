// Command-line front end: solve single instances, benchmark corpora,
// synthesize data, ingest production logs, build Partition reductions.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "belt/belt.hpp"

using nlohmann::json;

namespace {

std::vector<belt::Strategy> parse_algos(const std::string& csv) {
  std::vector<belt::Strategy> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(belt::strategy_from_name(item));
  }
  if (out.empty()) throw belt::Error("no strategies given");
  return out;
}

belt::Budget make_budget(const std::optional<long>& iters, const std::optional<long>& ms) {
  belt::Budget b;
  if (!iters && !ms) {
    b.max_sequences = 2000;
  } else {
    b.max_sequences = iters;
    b.max_wall_ms = ms;
  }
  b.validate();
  return b;
}

// ==========================================================================
// solve

struct SolveArgs {
  std::string instance_path;
  std::string algo;
  std::uint64_t seed = 1;
  long repeats = 1;
  std::optional<long> budget_iters;
  std::optional<long> budget_ms;
  long steps = 10;
  long swaps = 10;
  std::string out_path;
  std::string seq_out_path;
};

int run_solve(const SolveArgs& args) {
  if (args.repeats < 1) throw belt::Error("--repeats must be >= 1");
  belt::Instance inst = belt::io::load_instance(args.instance_path);
  belt::Strategy strat = belt::strategy_from_name(args.algo);
  belt::Budget budget = make_budget(args.budget_iters, args.budget_ms);
  belt::SearchParams params{args.steps, args.swaps};

  const long lb = belt::lower_bound(inst);
  const long wcb = belt::worst_case_bound(inst);

  std::optional<belt::SolveResult> best;
  std::vector<long> makespans;
  long evaluated = 0;
  for (long r = 0; r < args.repeats; ++r) {
    belt::SolveResult res =
        belt::solve(inst, strat, budget, params, belt::substream_seed(args.seed, static_cast<std::uint64_t>(r)));
    makespans.push_back(res.best_makespan);
    evaluated += res.sequences_evaluated;
    if (!best || res.best_makespan < best->best_makespan) best = std::move(res);
  }

  double mean = 0;
  for (long m : makespans) mean += static_cast<double>(m);
  mean /= static_cast<double>(args.repeats);
  double var = 0;
  for (long m : makespans) var += (static_cast<double>(m) - mean) * (static_cast<double>(m) - mean);
  double stddev = std::sqrt(var / static_cast<double>(args.repeats));

  json seq = json::array();
  for (belt::TypeIndex t : best->best_sequence.entries) seq.push_back(inst.type(t).id);
  json doc{{"algo", args.algo},
           {"seed", args.seed},
           {"repeats", args.repeats},
           {"lower_bound", lb},
           {"worst_case_bound", wcb},
           {"best_makespan", best->best_makespan},
           {"best_sequence", seq},
           {"mean_makespan", mean},
           {"stddev_makespan", stddev},
           {"repeat_makespans", makespans},
           {"sequences_evaluated", evaluated}};
  doc["budget_sequences"] = budget.max_sequences ? json(*budget.max_sequences) : json(nullptr);
  doc["budget_wall_ms"] = budget.max_wall_ms ? json(*budget.max_wall_ms) : json(nullptr);

  std::cout << "bounds: [" << lb << ", " << wcb << "]\n";
  std::cout << args.algo << ": best " << best->best_makespan << ", mean " << mean << " over "
            << args.repeats << " repeat(s), " << evaluated << " sequences evaluated\n";
  if (!args.out_path.empty()) belt::io::write_text(args.out_path, doc.dump(2) + "\n");
  if (!args.seq_out_path.empty()) belt::io::save_sequence(inst, best->best_sequence, args.seq_out_path);
  return 0;
}

// ==========================================================================
// bench

struct BenchArgs {
  std::string corpus_dir;
  std::string out_dir;
  std::string algos = "sr,nr,sr-loc,nr-loc";
  std::uint64_t seed = 1;
  long repeats = 10;
  std::optional<long> budget_iters;
  std::optional<long> budget_ms;
  long steps = 10;
  long swaps = 10;
  long idle_threshold = 600;
  long bin_width = 1;
  unsigned threads = 1;
};

int run_bench(const BenchArgs& args) {
  belt::BenchConfig config;
  config.strategies = parse_algos(args.algos);
  config.budget = make_budget(args.budget_iters, args.budget_ms);
  config.repeats = args.repeats;
  config.seed = args.seed;
  config.params = {args.steps, args.swaps};
  config.idle_threshold_s = args.idle_threshold;

  std::vector<belt::CorpusJob> jobs = belt::io::load_corpus(args.corpus_dir);
  std::cout << "benchmarking " << jobs.size() << " job(s), " << config.strategies.size()
            << " strategie(s), " << config.repeats << " repeat(s)\n";
  belt::BenchReport report = belt::run_benchmark(jobs, config, args.threads);

  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) throw belt::IoError("cannot create directory '" + args.out_dir + "'");
  const std::filesystem::path out(args.out_dir);
  belt::io::save_report_json(report, out / "report.json");
  belt::io::save_report_csv(report, out / "report.csv");

  for (std::size_t s = 0; s < report.strategy_names.size(); ++s) {
    const std::string& name = report.strategy_names[s];
    std::vector<long> gaps;
    std::vector<long> saved;
    for (const belt::JobRecord& rec : report.jobs) {
      gaps.push_back(std::llround(rec.per_strategy[s].gap));
      if (rec.per_strategy[s].saved_steps) {
        saved.push_back(std::llround(*rec.per_strategy[s].saved_steps));
      }
    }
    belt::io::save_histogram_csv(belt::histogram(gaps, args.bin_width), out / (name + "_gap_hist.csv"));
    if (!saved.empty()) {
      belt::io::save_histogram_csv(belt::histogram(saved, args.bin_width),
                                   out / (name + "_saved_hist.csv"));
    }
    const belt::StrategyCumulated& cum = report.cumulated[s];
    std::cout << name << ": total mean " << cum.total_mean << ", ratio-to-bound "
              << cum.ratio_lower_bound;
    if (cum.ratio_human) std::cout << ", ratio-to-human " << *cum.ratio_human;
    std::cout << "\n";
  }
  if (report.human_ratio_lower_bound) {
    std::cout << "human: ratio-to-bound " << *report.human_ratio_lower_bound << "\n";
  }

  // Sanity fit: human makespans against the bound, over the logged jobs.
  std::vector<std::pair<double, double>> points;
  for (const belt::JobRecord& rec : report.jobs) {
    if (rec.human_makespan) {
      points.push_back({static_cast<double>(rec.lower_bound), static_cast<double>(*rec.human_makespan)});
    }
  }
  if (points.size() >= 2) {
    try {
      belt::io::save_fit_csv(belt::fit_least_squares(points), out / "validation_fit.csv");
    } catch (const belt::DegenerateInput&) {
      std::cout << "validation fit skipped: all logged jobs share one bound\n";
    }
  }
  std::cout << "wrote " << (out / "report.json").string() << "\n";
  return 0;
}

// ==========================================================================
// gen

struct GenArgs {
  std::string profile_path;
  std::string out_dir;
  long step_seconds = 25;
  bool no_logs = false;
};

int run_gen(const GenArgs& args) {
  belt::CorpusProfile profile;
  if (!args.profile_path.empty()) profile = belt::io::load_profile(args.profile_path);
  belt::io::write_corpus(profile, args.out_dir, args.step_seconds, !args.no_logs);
  std::cout << "wrote " << profile.job_count << " job(s) to " << args.out_dir << "\n";
  return 0;
}

// ==========================================================================
// ingest

struct IngestArgs {
  std::string log_path;
  std::string instance_path;
  long idle_threshold = 600;
  std::string out_path;
};

int run_ingest(const IngestArgs& args) {
  belt::Instance declared = belt::io::load_instance(args.instance_path);
  belt::TimestampLog log = belt::io::load_log(args.log_path);
  belt::IngestResult r = belt::ingest_log(log, declared, args.idle_threshold);

  json idle = json::array();
  for (const belt::IdlePeriod& p : r.idle_periods) {
    idle.push_back({{"from_s", p.from_s}, {"to_s", p.to_s}});
  }
  json seq = json::array();
  for (belt::TypeIndex t : r.human_sequence.entries) seq.push_back(r.instance.type(t).id);
  json doc{{"job_id", log.job_id},
           {"raw_time_s", r.raw_time_s},
           {"adjusted_time_s", r.adjusted_time_s},
           {"idle_periods", idle},
           {"human_sequence", seq},
           {"computed_makespan", belt::computed_makespan(r)},
           {"lower_bound", belt::lower_bound(r.instance)},
           {"instance", json::parse(belt::io::instance_to_json_text(r.instance))},
           {"inconsistencies", r.inconsistencies}};

  std::cout << doc.dump(2) << "\n";
  if (!args.out_path.empty()) belt::io::write_text(args.out_path, doc.dump(2) + "\n");
  return 0;
}

// ==========================================================================
// reduce

struct ReduceArgs {
  std::string ints_csv;
  long slots = 0;
  std::string out_path;
};

int run_reduce(const ReduceArgs& args) {
  belt::PartitionInstance p;
  std::stringstream ss(args.ints_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw belt::Error("bad integer '" + item + "'");
      p.values.push_back(v);
    } catch (const std::logic_error&) {
      throw belt::Error("bad integer '" + item + "'");
    }
  }
  belt::ReductionOutput out = belt::reduce_partition(p, args.slots);

  json doc{{"trivially_no", out.trivially_no}};
  doc["threshold"] = out.threshold ? json(*out.threshold) : json(nullptr);
  doc["instance"] =
      out.instance ? json::parse(belt::io::instance_to_json_text(*out.instance)) : json(nullptr);
  std::cout << doc.dump(2) << "\n";
  if (!args.out_path.empty()) {
    if (!out.instance) throw belt::Error("nothing to write: the value sum is odd");
    belt::io::save_instance(*out.instance, args.out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conveyor-belt makespan toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "run one strategy on one instance file");
  solve->add_option("--instance", solve_args.instance_path, "instance JSON file")->required();
  solve->add_option("--algo", solve_args.algo, "sr, nr, sr-loc, nr-loc or brute")->required();
  solve->add_option("--seed", solve_args.seed, "master seed");
  solve->add_option("--repeats", solve_args.repeats, "independent repeats");
  solve->add_option("--budget-iters", solve_args.budget_iters, "sequences per repeat");
  solve->add_option("--budget-ms", solve_args.budget_ms, "wall-clock cap per repeat");
  solve->add_option("--steps", solve_args.steps, "local search steps");
  solve->add_option("--swaps", solve_args.swaps, "swaps tried per step");
  solve->add_option("--out", solve_args.out_path, "write a result JSON here");
  solve->add_option("--seq-out", solve_args.seq_out_path, "write the best sequence here");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "benchmark strategies across a corpus");
  bench->add_option("--corpus", bench_args.corpus_dir, "corpus directory")->required();
  bench->add_option("--out", bench_args.out_dir, "output directory")->required();
  bench->add_option("--algos", bench_args.algos, "comma-separated strategy list");
  bench->add_option("--seed", bench_args.seed, "master seed");
  bench->add_option("--repeats", bench_args.repeats, "repeats per job and strategy");
  bench->add_option("--budget-iters", bench_args.budget_iters, "sequences per run");
  bench->add_option("--budget-ms", bench_args.budget_ms, "wall-clock cap per run");
  bench->add_option("--steps", bench_args.steps, "local search steps");
  bench->add_option("--swaps", bench_args.swaps, "swaps tried per step");
  bench->add_option("--idle-threshold", bench_args.idle_threshold, "idle gap cutoff, seconds");
  bench->add_option("--bin-width", bench_args.bin_width, "histogram bin width");
  bench->add_option("--threads", bench_args.threads, "worker threads");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "synthesize a corpus directory");
  gen->add_option("--profile", gen_args.profile_path, "profile JSON (defaults if omitted)");
  gen->add_option("--out", gen_args.out_dir, "corpus directory to create")->required();
  gen->add_option("--step-seconds", gen_args.step_seconds, "belt step length in seconds");
  gen->add_flag("--no-logs", gen_args.no_logs, "instances only, no press logs");

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand("ingest", "read a press log against its instance");
  ingest->add_option("--log", ingest_args.log_path, "press-exit CSV log")->required();
  ingest->add_option("--instance", ingest_args.instance_path, "declared instance JSON")->required();
  ingest->add_option("--idle-threshold", ingest_args.idle_threshold, "idle gap cutoff, seconds");
  ingest->add_option("--out", ingest_args.out_path, "write the summary JSON here");

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "build the belt instance for a Partition question");
  reduce->add_option("--ints", reduce_args.ints_csv, "comma-separated positive integers")->required();
  reduce->add_option("--slots", reduce_args.slots, "belt slots (>= 2)")->required();
  reduce->add_option("--out", reduce_args.out_path, "write the instance JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(solve_args);
    if (app.got_subcommand(bench)) return run_bench(bench_args);
    if (app.got_subcommand(gen)) return run_gen(gen_args);
    if (app.got_subcommand(ingest)) return run_ingest(ingest_args);
    if (app.got_subcommand(reduce)) return run_reduce(reduce_args);
  } catch (const belt::IoError& e) {
    std::cerr << "ERROR: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ERROR: " << e.what() << "\n";
    return 1;
  }
  return 1;  // unreachable: require_subcommand guarantees a match
}
