#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "belt/decode.hpp"
#include "belt/rng.hpp"
#include "belt/sequence.hpp"

namespace belt {

// Stop after max_sequences decoded sequences and/or max_wall_ms milliseconds,
// whichever hits first. At least one limit must be set; wall time is checked
// between evaluations only, so fixing max_sequences alone gives fully
// deterministic runs.
struct Budget {
  std::optional<long> max_sequences;
  std::optional<long> max_wall_ms;

  void validate() const;
};

struct SearchParams {
  long steps = 10;  // local search iterations, >= 0
  long swaps = 10;  // candidate swaps tried per iteration, >= 1
};

struct SolveResult {
  InjectionSequence best_sequence;
  long best_makespan = 0;
  long sequences_evaluated = 0;
  long elapsed_ms = 0;
  std::uint64_t seed = 0;
};

// Uniform draw over all full sequences (random multiset permutation).
InjectionSequence uniform_sequence(const Instance& inst, Rng& rng);

// Weighted draw: while type A has moulds left it is picked with probability
// (d_A/c_A) / total, total being the sum over types that still have moulds.
// Types needing many items per mould therefore enter early.
InjectionSequence nr_sequence(const Instance& inst, Rng& rng);

enum class Generator { uniform, weighted };

// Draw-decode loop keeping the best sequence seen.
SolveResult run_random(const Instance& inst, Generator gen, const Budget& budget, std::uint64_t seed);

// Random pairwise-swap descent: per iteration, tries `swaps` random position
// pairs (apply, evaluate, undo), then commits the best candidate of the
// iteration (the earliest evaluated on ties) even if it is worse than the
// current sequence. Returns the best sequence over everything visited,
// the initial one included.
SolveResult local_search(const Instance& inst, const InjectionSequence& initial,
                         const SearchParams& params, Rng& rng);

// Alternates a generator draw with a local search pass until the budget is
// exhausted. Every decoded sequence (initial or swap candidate) counts toward
// max_sequences.
SolveResult run_restarts(const Instance& inst, Generator gen, const SearchParams& params,
                         const Budget& budget, std::uint64_t seed);

// Number of distinct full sequences (multiset permutations); TooLarge if it
// exceeds cap.
long distinct_permutation_count(const Instance& inst, long cap);

// Exact optimum by enumerating every distinct full sequence. Ties go to the
// first sequence in lexicographic order.
SolveResult brute_force(const Instance& inst, long cap = 1000000);

// Strategy names as used on the command line and in reports.
enum class Strategy { sr, nr, sr_loc, nr_loc, brute };

Strategy strategy_from_name(const std::string& name);  // throws UnknownStrategy
const char* strategy_name(Strategy s);

// Dispatch one strategy run. brute ignores budget, params and seed.
SolveResult solve(const Instance& inst, Strategy strategy, const Budget& budget,
                  const SearchParams& params, std::uint64_t seed, long brute_cap = 1000000);

}  // namespace belt
