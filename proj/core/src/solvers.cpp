#include "belt/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "belt/errors.hpp"

namespace belt {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Wall time is only looked at between evaluations; with max_sequences alone
// this never consults the clock, keeping runs deterministic.
struct BudgetTracker {
  std::optional<long> max_seq;
  std::optional<long> max_ms;
  Clock::time_point t0;

  explicit BudgetTracker(const Budget& b) : max_seq(b.max_sequences), max_ms(b.max_wall_ms), t0(Clock::now()) {}

  bool exhausted(long evaluated) const {
    if (max_seq && evaluated >= *max_seq) return true;
    if (max_ms && ms_since(t0) >= *max_ms) return true;
    return false;
  }
};

InjectionSequence draw(const Instance& inst, Generator gen, Rng& rng) {
  return gen == Generator::uniform ? uniform_sequence(inst, rng) : nr_sequence(inst, rng);
}

void validate_params(const SearchParams& params) {
  if (params.steps < 0) throw Error("search steps must be >= 0");
  if (params.swaps < 1) throw Error("search swaps must be >= 1");
}

// One descent pass from `current` (mutated in place). Every candidate counts
// as an evaluation; the global best in `res` is updated per candidate so an
// exhausted budget never loses a visited sequence.
void local_search_pass(MakespanEvaluator& eval, InjectionSequence& current,
                       const SearchParams& params, Rng& rng, const BudgetTracker* tracker,
                       SolveResult& res) {
  auto& e = current.entries;
  const std::size_t n = e.size();
  for (long step = 0; step < params.steps; ++step) {
    if (tracker && tracker->exhausted(res.sequences_evaluated)) return;
    long pass_best = std::numeric_limits<long>::max();
    std::size_t pa = 0, pb = 0;
    bool evaluated_any = false;
    for (long t = 0; t < params.swaps; ++t) {
      if (tracker && tracker->exhausted(res.sequences_evaluated)) break;
      std::size_t a = static_cast<std::size_t>(rng.below(n));
      std::size_t b = static_cast<std::size_t>(rng.below(n));
      std::swap(e[a], e[b]);
      long m = eval(current);
      ++res.sequences_evaluated;
      if (m < res.best_makespan) {
        res.best_makespan = m;
        res.best_sequence = current;
      }
      if (m < pass_best) {  // strict: earliest evaluated wins ties
        pass_best = m;
        pa = a;
        pb = b;
        evaluated_any = true;
      }
      std::swap(e[a], e[b]);
    }
    if (!evaluated_any) return;
    // Commit the pass winner even when it is worse than `current`; the walk
    // is allowed to drift uphill, the returned best never is.
    std::swap(e[pa], e[pb]);
  }
}

}  // namespace

void Budget::validate() const {
  if (!max_sequences && !max_wall_ms) throw Error("budget needs max_sequences or max_wall_ms");
  if (max_sequences && *max_sequences < 1) throw Error("max_sequences must be >= 1");
  if (max_wall_ms && *max_wall_ms < 0) throw Error("max_wall_ms must be >= 0");
}

InjectionSequence uniform_sequence(const Instance& inst, Rng& rng) {
  InjectionSequence seq;
  seq.entries.reserve(static_cast<std::size_t>(inst.total_active_moulds()));
  for (TypeIndex t = 0; t < inst.type_count(); ++t) {
    for (long k = 0; k < inst.type(t).active_moulds(); ++k) seq.entries.push_back(t);
  }
  // Fisher-Yates; every full sequence equally likely.
  for (std::size_t i = seq.entries.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(seq.entries[i], seq.entries[j]);
  }
  return seq;
}

InjectionSequence nr_sequence(const Instance& inst, Rng& rng) {
  const std::size_t ntypes = inst.type_count();
  std::vector<long> left(ntypes);
  std::vector<double> weight(ntypes);
  double total = 0.0;
  for (TypeIndex t = 0; t < ntypes; ++t) {
    left[t] = inst.type(t).active_moulds();
    weight[t] = static_cast<double>(inst.type(t).demand) / static_cast<double>(inst.type(t).capacity);
    total += weight[t];
  }

  InjectionSequence seq;
  seq.entries.reserve(static_cast<std::size_t>(inst.total_active_moulds()));
  for (long n = inst.total_active_moulds(); n > 0; --n) {
    double u = rng.next_double() * total;
    double cum = 0.0;
    TypeIndex pick = kEmptySlot;
    for (TypeIndex t = 0; t < ntypes; ++t) {
      if (left[t] == 0) continue;
      pick = t;  // falls through to the last live type if rounding leaves u >= cum
      cum += weight[t];
      if (u < cum) break;
    }
    seq.entries.push_back(pick);
    if (--left[pick] == 0) total -= weight[pick];
  }
  return seq;
}

SolveResult run_random(const Instance& inst, Generator gen, const Budget& budget, std::uint64_t seed) {
  budget.validate();
  BudgetTracker tracker(budget);
  Rng rng(seed);
  MakespanEvaluator eval(inst);

  SolveResult res;
  res.seed = seed;
  res.best_makespan = std::numeric_limits<long>::max();
  do {
    InjectionSequence s = draw(inst, gen, rng);
    long m = eval(s);
    ++res.sequences_evaluated;
    if (m < res.best_makespan) {
      res.best_makespan = m;
      res.best_sequence = std::move(s);
    }
  } while (!tracker.exhausted(res.sequences_evaluated));
  res.elapsed_ms = ms_since(tracker.t0);
  return res;
}

SolveResult local_search(const Instance& inst, const InjectionSequence& initial,
                         const SearchParams& params, Rng& rng) {
  validate_params(params);
  if (!is_full_sequence(inst, initial)) throw Error("local search expects a full sequence");

  const auto t0 = Clock::now();
  MakespanEvaluator eval(inst);
  SolveResult res;
  res.best_sequence = initial;
  res.best_makespan = eval(initial);
  res.sequences_evaluated = 1;

  InjectionSequence current = initial;
  local_search_pass(eval, current, params, rng, nullptr, res);
  res.elapsed_ms = ms_since(t0);
  return res;
}

SolveResult run_restarts(const Instance& inst, Generator gen, const SearchParams& params,
                         const Budget& budget, std::uint64_t seed) {
  budget.validate();
  validate_params(params);
  BudgetTracker tracker(budget);
  Rng rng(seed);
  MakespanEvaluator eval(inst);

  SolveResult res;
  res.seed = seed;
  res.best_makespan = std::numeric_limits<long>::max();
  do {
    InjectionSequence current = draw(inst, gen, rng);
    long m = eval(current);
    ++res.sequences_evaluated;
    if (m < res.best_makespan) {
      res.best_makespan = m;
      res.best_sequence = current;
    }
    if (tracker.exhausted(res.sequences_evaluated)) break;
    local_search_pass(eval, current, params, rng, &tracker, res);
  } while (!tracker.exhausted(res.sequences_evaluated));
  res.elapsed_ms = ms_since(tracker.t0);
  return res;
}

long distinct_permutation_count(const Instance& inst, long cap) {
  if (cap < 1) throw Error("enumeration cap must be positive");
  // Multinomial built from incremental binomials; each intermediate value is
  // itself a multinomial, so the divisions are exact.
  const unsigned __int128 ceiling = static_cast<unsigned __int128>(2) * 1000000000000000000ULL;
  unsigned __int128 count = 1;
  long placed = 0;
  for (const TypeSpec& t : inst.types()) {
    for (long k = 1; k <= t.active_moulds(); ++k) {
      count = count * static_cast<unsigned long long>(placed + k) / static_cast<unsigned long long>(k);
      if (count > ceiling) throw TooLarge("distinct sequence count exceeds " + std::to_string(cap));
    }
    placed += t.active_moulds();
  }
  if (count > static_cast<unsigned __int128>(cap)) {
    throw TooLarge("distinct sequence count exceeds " + std::to_string(cap));
  }
  return static_cast<long>(count);
}

SolveResult brute_force(const Instance& inst, long cap) {
  const long expected = distinct_permutation_count(inst, cap);
  const auto t0 = Clock::now();

  InjectionSequence perm;
  for (TypeIndex t = 0; t < inst.type_count(); ++t) {
    for (long k = 0; k < inst.type(t).active_moulds(); ++k) perm.entries.push_back(t);
  }
  // Entries start sorted, so next_permutation walks every distinct multiset
  // permutation exactly once, in lexicographic order.
  MakespanEvaluator eval(inst);
  SolveResult res;
  res.best_makespan = std::numeric_limits<long>::max();
  do {
    long m = eval(perm);
    ++res.sequences_evaluated;
    if (m < res.best_makespan) {
      res.best_makespan = m;
      res.best_sequence = perm;
    }
  } while (std::next_permutation(perm.entries.begin(), perm.entries.end()));

  if (res.sequences_evaluated != expected) {
    throw Error("enumeration count mismatch (internal)");
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "sr") return Strategy::sr;
  if (name == "nr") return Strategy::nr;
  if (name == "sr-loc") return Strategy::sr_loc;
  if (name == "nr-loc") return Strategy::nr_loc;
  if (name == "brute") return Strategy::brute;
  throw UnknownStrategy("unknown strategy '" + name + "'");
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::sr: return "sr";
    case Strategy::nr: return "nr";
    case Strategy::sr_loc: return "sr-loc";
    case Strategy::nr_loc: return "nr-loc";
    case Strategy::brute: return "brute";
  }
  throw Error("bad strategy value");
}

SolveResult solve(const Instance& inst, Strategy strategy, const Budget& budget,
                  const SearchParams& params, std::uint64_t seed, long brute_cap) {
  switch (strategy) {
    case Strategy::sr: return run_random(inst, Generator::uniform, budget, seed);
    case Strategy::nr: return run_random(inst, Generator::weighted, budget, seed);
    case Strategy::sr_loc: return run_restarts(inst, Generator::uniform, params, budget, seed);
    case Strategy::nr_loc: return run_restarts(inst, Generator::weighted, params, budget, seed);
    case Strategy::brute: return brute_force(inst, brute_cap);
  }
  throw Error("bad strategy value");
}

}  // namespace belt
