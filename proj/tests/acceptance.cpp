// Acceptance gate for the toolkit: ten checks, one PASS/FAIL line each,
// non-zero exit if anything fails. Runs standalone (no doctest).

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "test_helpers.hpp"

using namespace belt;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

// Every assignment the suite materialises goes through here so the
// items-finished bookkeeping is checked everywhere, not in one spot.
long conservation_checked = 0;
long conservation_violations = 0;

BeltAssignment materialize(const Instance& inst, const InjectionSequence& seq) {
  BeltAssignment b = decode(inst, seq);
  long produced = 0;
  for (long v : load_profile(b)) produced += v;
  ++conservation_checked;
  if (produced != inst.total_demand()) ++conservation_violations;
  return b;
}

void verdict(int n, bool ok, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, text.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Small instances whose full sequence space can be enumerated outright:
// up to 3 types on 2..4 slots, demands up to 6, capacities up to 3, at most
// 7 moulds in play.
Instance random_small(Rng& rng) {
  static const char* ids[] = {"A", "B", "C"};
  for (;;) {
    RawInstance raw;
    raw.slots = 2 + static_cast<long>(rng.below(3));
    long ntypes = 1 + static_cast<long>(rng.below(3));
    long cap_sum = 0;
    for (long i = 0; i < ntypes; ++i) {
      long d = 1 + static_cast<long>(rng.below(6));
      long c = 1 + static_cast<long>(rng.below(3));
      cap_sum += c;
      raw.types.push_back({ids[i], d, c});
    }
    if (cap_sum > 7) continue;
    return validate_instance(raw).instance;
  }
}

std::vector<TypeIndex> mould_multiset(const Instance& inst) {
  std::vector<TypeIndex> entries;
  for (std::size_t t = 0; t < inst.type_count(); ++t) {
    const TypeSpec& spec = inst.type(static_cast<TypeIndex>(t));
    for (long k = 0; k < std::min(spec.demand, spec.capacity); ++k) {
      entries.push_back(static_cast<TypeIndex>(t));
    }
  }
  std::sort(entries.begin(), entries.end());
  return entries;
}

// --------------------------------------------------------------------------
// 1: every enumerable makespan sits between the bounds, the bounds are at
//    most a factor two apart, and exhaustive search agrees with brute_force.
// 2: plain random search with a budget of four times the distinct orders
//    finds the enumerated optimum almost always.
void criteria_small_instances() {
  auto t0 = Clock::now();
  Rng rng(20260813);
  const int n_instances = 200;
  bool bounds_ok = true;
  bool agree_ok = true;
  bool factor_ok = true;
  long sequences_total = 0;
  int optimum_hits = 0;

  for (int i = 0; i < n_instances; ++i) {
    Instance inst = random_small(rng);
    const long lb = lower_bound(inst);
    const long wcb = worst_case_bound(inst);
    if (wcb > 2 * lb) factor_ok = false;

    std::vector<TypeIndex> entries = mould_multiset(inst);
    MakespanEvaluator eval(inst);
    long count = 0;
    long best = LONG_MAX;
    do {
      InjectionSequence seq{entries};
      BeltAssignment b = materialize(inst, seq);
      long m = makespan(b);
      if (eval(seq) != m) agree_ok = false;
      if (m < lb || m > wcb) bounds_ok = false;
      best = std::min(best, m);
      ++count;
    } while (std::next_permutation(entries.begin(), entries.end()));
    sequences_total += count;

    if (count != distinct_permutation_count(inst, 1000000)) agree_ok = false;
    SolveResult bf = brute_force(inst);
    if (bf.best_makespan != best || bf.sequences_evaluated != count) agree_ok = false;

    SolveResult rr = run_random(inst, Generator::uniform, {4 * count, std::nullopt}, rng.next_u64());
    if (rr.best_makespan < lb || rr.best_makespan > wcb) bounds_ok = false;
    if (rr.best_makespan == best) ++optimum_hits;
  }

  double dt = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%ld enumerated sequences over %d small instances stay within the bounds and match "
                "brute force (factor-two bound holds, %.1f s)",
                sequences_total, n_instances, dt);
  verdict(1, bounds_ok && agree_ok && factor_ok && dt < 60.0, buf);

  double rate = static_cast<double>(optimum_hits) / n_instances;
  std::snprintf(buf, sizeof buf,
                "random search with 4x the distinct orders hit the enumerated optimum on %.1f%% of "
                "instances (needs >= 95%%)",
                100.0 * rate);
  verdict(2, rate >= 0.95, buf);
}

// --------------------------------------------------------------------------
// 3: the Partition reduction agrees with a subset-sum oracle on every
//    multiset of up to four values from {1..4}.
void criterion_reduction() {
  auto t0 = Clock::now();
  bool ok = true;
  int cases = 0;

  std::vector<long> values;
  auto recurse = [&](auto&& self, long start) -> void {
    if (!values.empty()) {
      ++cases;
      PartitionInstance p{values};
      if (decide_partition_via_belt(p, 3) != subset_sum_oracle(p)) ok = false;
    }
    if (values.size() == 4) return;
    for (long v = start; v <= 4; ++v) {
      values.push_back(v);
      self(self, v);
      values.pop_back();
    }
  };
  recurse(recurse, 1);

  double dt = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "belt optimum decides Partition like the subset-sum oracle on all %d value "
                "multisets (%.1f s)",
                cases, dt);
  verdict(3, ok && cases == 69 && dt < 120.0, buf);
}

// --------------------------------------------------------------------------
// 4: decoding a complete injection sequence always yields a well-formed
//    assignment, and the injection order read back off the belt reproduces
//    the assignment exactly.
void criterion_round_trip() {
  Rng rng(41);
  bool formed_ok = true;
  bool trip_ok = true;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    Instance inst = test::random_instance(rng);
    InjectionSequence seq = uniform_sequence(inst, rng);
    BeltAssignment b = materialize(inst, seq);
    if (!check_assignment(inst, b).all_ok()) formed_ok = false;
    InjectionSequence back = short_injection_sequence(inst, b);
    BeltAssignment again = materialize(inst, back);
    if (again.steps() != b.steps()) trip_ok = false;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d random complete sequences decode to well-formed assignments and round-trip "
                "through their injection order",
                n);
  verdict(4, formed_ok && trip_ok, buf);
}

// --------------------------------------------------------------------------
// 5: the demand-weighted generator picks a first type proportionally to
//    demand over capacity (0.40 for the reference instance).
void criterion_weighted_draw() {
  Instance inst = test::make_instance(3, {{"A", 4, 2}, {"B", 3, 1}});
  Rng rng(5);
  const int n = 10000;
  long a_first = 0;
  for (int i = 0; i < n; ++i) {
    if (nr_sequence(inst, rng).entries[0] == *inst.find("A")) ++a_first;
  }
  double rate = static_cast<double>(a_first) / n;
  char buf[256];
  std::snprintf(buf, sizeof buf, "weighted generator opened with the 0.40-weight type %.4f of the "
                                 "time (wanted 0.40 +/- 0.02)",
                rate);
  verdict(5, std::abs(rate - 0.40) < 0.02, buf);
}

// --------------------------------------------------------------------------
// 6: local search never ends worse than its start, and zero steps means the
//    start comes back untouched.
void criterion_local_search() {
  Rng rng(6);
  bool mono_ok = true;
  bool ident_ok = true;
  const int n = 500;
  for (int i = 0; i < n; ++i) {
    Instance inst = test::random_instance(rng);
    InjectionSequence init = uniform_sequence(inst, rng);
    long m0 = makespan(materialize(inst, init));

    Rng walk(rng.next_u64());
    SolveResult res = local_search(inst, init, {3, 4}, walk);
    if (res.best_makespan > m0) mono_ok = false;

    Rng frozen(rng.next_u64());
    SolveResult none = local_search(inst, init, {0, 4}, frozen);
    if (none.best_makespan != m0 || !(none.best_sequence == init)) ident_ok = false;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d local searches never regressed below their start, zero steps returned it "
                "unchanged",
                n);
  verdict(6, mono_ok && ident_ok, buf);
}

// --------------------------------------------------------------------------
// 7: a synthesized press log reconciles with zero notes and reproduces the
//    model makespan; an end-of-run halt is subtracted to the second.
void criterion_log_round_trip() {
  Rng rng(7);
  bool clean_ok = true;
  bool gap_ok = true;
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    Instance inst = test::random_instance(rng);
    InjectionSequence seq = uniform_sequence(inst, rng);
    BeltAssignment b = materialize(inst, seq);

    TimestampLog log = synthesize_log(inst, b, 5, {}, rng);
    IngestResult r = ingest_log(log, inst);
    if (!r.inconsistencies.empty() || !r.idle_periods.empty()) clean_ok = false;
    if (computed_makespan(r) != makespan(b)) clean_ok = false;
    if (decode(r.instance, r.human_sequence).steps() != b.steps()) clean_ok = false;

    std::vector<std::pair<long, long>> halt{{static_cast<long>(b.steps().size()) - 1, 900}};
    TimestampLog halted = synthesize_log(inst, b, 5, halt, rng);
    IngestResult r2 = ingest_log(halted, inst);
    if (!r2.inconsistencies.empty()) gap_ok = false;
    if (r2.raw_time_s != r.raw_time_s + 900) gap_ok = false;
    if (r2.adjusted_time_s != r2.raw_time_s - 900) gap_ok = false;
    if (r2.adjusted_time_s != r.adjusted_time_s) gap_ok = false;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d synthesized logs ingested with zero notes and exact makespans; 900 s halts "
                "subtracted exactly",
                n);
  verdict(7, clean_ok && gap_ok, buf);
}

// --------------------------------------------------------------------------
// 8: the default corpus has the documented shape and all four strategies
//    land between 1x and 2x the cumulated bound under the standard budget.
// 10: rerunning the whole benchmark with the same seed reproduces the
//     report byte for byte.
void criteria_corpus_bench() {
  auto t0 = Clock::now();
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "belt_acceptance_corpus";
  fs::remove_all(dir);

  CorpusProfile profile;
  io::write_corpus(profile, dir);
  std::vector<CorpusJob> jobs = io::load_corpus(dir);

  bool shape_ok = static_cast<long>(jobs.size()) == profile.job_count;
  long total_demand = 0;
  for (const CorpusJob& job : jobs) {
    total_demand += job.instance.total_demand();
    if (job.instance.slots() != 20) shape_ok = false;
    for (const TypeSpec& t : job.instance.types()) {
      if (t.capacity < 1 || t.capacity > 8 || t.demand < 1) shape_ok = false;
    }
    if (!job.log) shape_ok = false;
  }
  if (total_demand < 225000 || total_demand > 275000) shape_ok = false;

  BenchConfig config;
  config.strategies = {Strategy::sr, Strategy::nr, Strategy::sr_loc, Strategy::nr_loc};
  config.budget = {2000, std::nullopt};
  config.repeats = 10;
  config.seed = profile.seed;

  BenchReport report = run_benchmark(jobs, config);
  bool ratio_ok = true;
  for (const StrategyCumulated& cum : report.cumulated) {
    if (cum.ratio_lower_bound < 1.0 || cum.ratio_lower_bound > 2.0) ratio_ok = false;
  }

  double dt = seconds_since(t0);
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%zu-job corpus (total demand %ld) benchmarked with 4 strategies x 2000 sequences "
                "x 10 repeats; every cumulated ratio to the bound is in [1, 2] (%.1f s)",
                jobs.size(), total_demand, dt);
  verdict(8, shape_ok && ratio_ok && dt < 1500.0, buf);
  for (std::size_t s = 0; s < report.strategy_names.size(); ++s) {
    std::printf("  [info] %s: ratio-to-bound %.4f%s\n", report.strategy_names[s].c_str(),
                report.cumulated[s].ratio_lower_bound,
                (report.strategy_names[s] == "nr" || report.strategy_names[s] == "nr-loc")
                    ? " (soft target <= 1.05)"
                    : "");
  }

  char buf9[256];
  std::snprintf(buf9, sizeof buf9,
                "items finished equals total demand on all %ld assignments materialised by this "
                "suite (%ld violations)",
                conservation_checked, conservation_violations);
  verdict(9, conservation_checked > 1000 && conservation_violations == 0, buf9);

  auto t1 = Clock::now();
  BenchReport rerun = run_benchmark(jobs, config);
  bool identical = rerun == report &&
                   io::report_to_json_text(rerun) == io::report_to_json_text(report);
  double dt2 = seconds_since(t1);
  std::snprintf(buf, sizeof buf,
                "rerunning the corpus benchmark with the same seed reproduced the report byte for "
                "byte (%.1f s)",
                dt2);
  verdict(10, identical, buf);

  fs::remove_all(dir);
}

}  // namespace

int main() {
  criteria_small_instances();
  criterion_reduction();
  criterion_round_trip();
  criterion_weighted_draw();
  criterion_local_search();
  criterion_log_round_trip();
  criteria_corpus_bench();

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
