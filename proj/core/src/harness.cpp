#include "belt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "belt/bounds.hpp"
#include "belt/errors.hpp"

namespace belt {

namespace {

JobRecord run_job(const CorpusJob& job, const BenchConfig& config, std::size_t job_index,
                  std::size_t n_strategies) {
  Instance inst = job.instance;
  std::optional<long> human;
  if (job.log) {
    // A job with a log is taken at face value of the log: demands and
    // capacities are reconciled first and everything below uses the result.
    IngestResult ing = ingest_log(*job.log, inst, config.idle_threshold_s);
    human = computed_makespan(ing);
    inst = std::move(ing.instance);
  }

  JobRecord rec;
  rec.job_id = job.id;
  rec.lower_bound = lower_bound(inst);
  rec.worst_case_bound = worst_case_bound(inst);
  rec.human_makespan = human;

  std::vector<long> runs(static_cast<std::size_t>(config.repeats));
  for (std::size_t s = 0; s < config.strategies.size(); ++s) {
    for (long r = 0; r < config.repeats; ++r) {
      const std::uint64_t trial =
          (static_cast<std::uint64_t>(job_index) * n_strategies + s) * static_cast<std::uint64_t>(config.repeats) +
          static_cast<std::uint64_t>(r);
      SolveResult res = solve(inst, config.strategies[s], config.budget, config.params,
                              substream_seed(config.seed, trial));
      runs[static_cast<std::size_t>(r)] = res.best_makespan;
    }
    StrategyStats stats;
    stats.min = *std::min_element(runs.begin(), runs.end());
    double sum = 0.0;
    for (long m : runs) sum += static_cast<double>(m);
    stats.mean = sum / static_cast<double>(config.repeats);
    double var = 0.0;
    for (long m : runs) var += (static_cast<double>(m) - stats.mean) * (static_cast<double>(m) - stats.mean);
    stats.stddev = std::sqrt(var / static_cast<double>(config.repeats));
    if (human) stats.saved_steps = static_cast<double>(*human) - stats.mean;
    stats.gap = stats.mean - static_cast<double>(rec.lower_bound);
    rec.per_strategy.push_back(stats);
  }
  return rec;
}

}  // namespace

BenchReport run_benchmark(const std::vector<CorpusJob>& jobs, const BenchConfig& config,
                          unsigned threads) {
  if (jobs.empty()) throw Error("no jobs to benchmark");
  if (config.strategies.empty()) throw Error("no strategies configured");
  if (config.repeats < 1) throw Error("repeats must be >= 1");
  config.budget.validate();

  BenchReport report;
  for (Strategy s : config.strategies) report.strategy_names.push_back(strategy_name(s));
  report.repeats = config.repeats;
  report.seed = config.seed;
  report.budget_sequences = config.budget.max_sequences;
  report.budget_wall_ms = config.budget.max_wall_ms;
  report.search_steps = config.params.steps;
  report.search_swaps = config.params.swaps;
  report.idle_threshold_s = config.idle_threshold_s;
  report.jobs.resize(jobs.size());

  const std::size_t n_strategies = config.strategies.size();
  if (threads <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      report.jobs[i] = run_job(jobs[i], config, i, n_strategies);
    }
  } else {
    // Jobs are independent; hand them out by index so the records land in
    // corpus order regardless of scheduling.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          report.jobs[i] = run_job(jobs[i], config, i, n_strategies);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Ratio of sums: add up makespans first, divide once. Human comparisons
  // use only the jobs that have a baseline.
  long human_total = 0;
  bool any_human = false;
  for (const JobRecord& rec : report.jobs) {
    report.cumulated_lower_bound += rec.lower_bound;
    if (rec.human_makespan) {
      any_human = true;
      human_total += *rec.human_makespan;
      report.cumulated_lower_bound_human_jobs += rec.lower_bound;
    }
  }
  if (any_human) {
    report.cumulated_human = human_total;
    report.human_ratio_lower_bound =
        static_cast<double>(human_total) / static_cast<double>(report.cumulated_lower_bound_human_jobs);
  }
  for (std::size_t s = 0; s < n_strategies; ++s) {
    StrategyCumulated cum;
    for (const JobRecord& rec : report.jobs) {
      cum.total_mean += rec.per_strategy[s].mean;
      if (rec.human_makespan) cum.total_mean_human_jobs += rec.per_strategy[s].mean;
    }
    cum.ratio_lower_bound = cum.total_mean / static_cast<double>(report.cumulated_lower_bound);
    if (any_human) cum.ratio_human = cum.total_mean_human_jobs / static_cast<double>(human_total);
    report.cumulated.push_back(cum);
  }
  return report;
}

std::vector<std::pair<long, long>> histogram(const std::vector<long>& values, long bin_width) {
  if (bin_width < 1) throw DegenerateInput("bin width must be >= 1");
  std::vector<std::pair<long, long>> bins;
  if (values.empty()) return bins;
  const long lo = *std::min_element(values.begin(), values.end());
  const long hi = *std::max_element(values.begin(), values.end());
  bins.resize(static_cast<std::size_t>((hi - lo) / bin_width) + 1);
  for (std::size_t i = 0; i < bins.size(); ++i) {
    bins[i] = {lo + static_cast<long>(i) * bin_width, 0};
  }
  for (long v : values) ++bins[static_cast<std::size_t>((v - lo) / bin_width)].second;
  return bins;
}

LinearFit fit_least_squares(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw DegenerateInput("least squares needs at least two points");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw DegenerateInput("least squares needs two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = points;
  return fit;
}

LoadProfile load_series(const Instance& inst, const InjectionSequence& seq) {
  return load_profile(decode(inst, seq));
}

}  // namespace belt
