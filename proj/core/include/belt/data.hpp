#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belt/assignment.hpp"
#include "belt/instance.hpp"
#include "belt/rng.hpp"
#include "belt/sequence.hpp"

namespace belt {

// Knobs for synthetic job generation. Defaults mimic a season of real press
// data: 349 jobs on a 20-slot belt, mould counts 1..8 per type, heavy-tailed
// per-type demands adding up to about 250k items across the corpus.
struct CorpusProfile {
  long job_count = 349;
  std::pair<long, long> type_count_range = {2, 8};
  double demand_mean = 143.3;       // mean of the (log-normal) per-type demand
  double demand_dispersion = 1.0;   // sigma of the underlying normal
  std::pair<long, long> capacity_range = {1, 8};
  long slots = 20;
  std::uint64_t seed = 20260813;
};

struct LogEvent {
  long time_s = 0;
  std::string mould_id;  // "<type>#<k>", k = 1-based injection ordinal
  std::string type;
};

struct TimestampLog {
  std::string job_id;
  long start_s = 0;
  long end_s = 0;
  std::vector<LogEvent> events;  // sorted by time
};

struct IdlePeriod {
  long from_s = 0;
  long to_s = 0;
  long duration() const { return to_s - from_s; }
  bool operator==(const IdlePeriod&) const = default;
};

struct IngestResult {
  Instance instance;  // reconciled against what the log actually shows
  InjectionSequence human_sequence;
  long raw_time_s = 0;
  long adjusted_time_s = 0;
  std::vector<IdlePeriod> idle_periods;
  std::vector<std::string> inconsistencies;
};

// One synthetic job. Type ids are "T1".."Tk"; demands are a discretised
// log-normal (clamped to >= 1), capacities uniform in capacity_range (clamped
// to the slot count).
Instance generate_instance(const CorpusProfile& profile, Rng& rng);

// Press-exit log of an assignment: the mould fed in at step i leaves the
// press at start + (i + N) * step_seconds. idle_spec entries (after_step,
// gap_seconds) halt the belt after the given step, shifting every later event
// (and the log end) by exactly gap_seconds. rng only picks the start-of-day
// offset.
TimestampLog synthesize_log(const Instance& inst, const BeltAssignment& b, long step_seconds,
                            const std::vector<std::pair<long, long>>& idle_spec, Rng& rng);

// Reads a production log back into model terms:
//   - idle periods: maximal event-free intervals >= idle_threshold_s, the
//     boundaries (start to first event, last event to end) included;
//     adjusted time subtracts their full durations from end - start
//   - human_sequence: mould types in order of first mould appearance
//   - demand per type is the observed event count, capacity the larger of the
//     declared value and the distinct mould ids seen; every change, dropped
//     type or mould-order irregularity is recorded as an inconsistency note
// Throws EmptyLog when there are no events.
IngestResult ingest_log(const TimestampLog& log, const Instance& declared,
                        long idle_threshold_s = 600);

// Model makespan of the human order: decode the reconciled instance with the
// recovered sequence.
long computed_makespan(const IngestResult& result);

}  // namespace belt
