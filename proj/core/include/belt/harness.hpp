#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belt/data.hpp"
#include "belt/solvers.hpp"

namespace belt {

struct BenchConfig {
  std::vector<Strategy> strategies;
  Budget budget{2000, std::nullopt};  // deterministic by default
  long repeats = 10;
  std::uint64_t seed = 1;
  SearchParams params;
  long idle_threshold_s = 600;
};

// Aggregates over the repeats of one strategy on one job.
struct StrategyStats {
  double mean = 0.0;
  long min = 0;
  double stddev = 0.0;
  std::optional<double> saved_steps;  // human makespan - mean, if a log exists
  double gap = 0.0;                   // mean - lower bound

  bool operator==(const StrategyStats&) const = default;
};

struct JobRecord {
  std::string job_id;
  long lower_bound = 0;
  long worst_case_bound = 0;
  std::optional<long> human_makespan;
  std::vector<StrategyStats> per_strategy;  // parallel to BenchConfig::strategies

  bool operator==(const JobRecord&) const = default;
};

// Cumulated ratios follow the ratio-of-sums convention: makespans are summed
// over jobs first (job means for the strategies), then divided.
struct StrategyCumulated {
  double total_mean = 0.0;
  double total_mean_human_jobs = 0.0;  // restricted to jobs with a baseline
  double ratio_lower_bound = 0.0;
  std::optional<double> ratio_human;

  bool operator==(const StrategyCumulated&) const = default;
};

struct BenchReport {
  std::vector<std::string> strategy_names;
  long repeats = 0;
  std::uint64_t seed = 0;
  std::optional<long> budget_sequences;
  std::optional<long> budget_wall_ms;
  long search_steps = 0;
  long search_swaps = 0;
  long idle_threshold_s = 0;
  std::vector<JobRecord> jobs;
  long cumulated_lower_bound = 0;
  long cumulated_lower_bound_human_jobs = 0;
  std::optional<long> cumulated_human;
  std::optional<double> human_ratio_lower_bound;
  std::vector<StrategyCumulated> cumulated;  // parallel to strategy_names

  bool operator==(const BenchReport&) const = default;
};

// One corpus job as found on disk.
struct CorpusJob {
  std::string id;
  Instance instance;
  std::optional<TimestampLog> log;
};

// Runs every configured strategy on every job. Jobs with a log are first
// reconciled through ingest_log and everything on that job (bounds, solver
// runs, human baseline) uses the reconciled instance. Each (job, strategy,
// repeat) triple draws its own substream: seed XOR the triple's rank in
// job-major order. Jobs are independent; with threads > 1 they run
// concurrently, results land in job order either way. The report carries no
// wall-clock data, so equal seeds give byte-equal reports.
BenchReport run_benchmark(const std::vector<CorpusJob>& jobs, const BenchConfig& config,
                          unsigned threads = 1);

// Left-closed bins of width bin_width starting at the minimum value; covers
// the range up to the maximum, zero-frequency bins included.
std::vector<std::pair<long, long>> histogram(const std::vector<long>& values, long bin_width);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<std::pair<double, double>> points;
};

// Ordinary least squares through the points. DegenerateInput unless there are
// two points with distinct x.
LinearFit fit_least_squares(const std::vector<std::pair<double, double>>& points);

// Per-round finished items of the decoded sequence.
LoadProfile load_series(const Instance& inst, const InjectionSequence& seq);

}  // namespace belt
