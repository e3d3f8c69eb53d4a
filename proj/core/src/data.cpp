#include "belt/data.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "belt/decode.hpp"
#include "belt/errors.hpp"

namespace belt {

Instance generate_instance(const CorpusProfile& profile, Rng& rng) {
  if (profile.slots < 1) throw InvalidInstance("profile slots must be >= 1");
  if (profile.type_count_range.first < 1 || profile.type_count_range.second < profile.type_count_range.first) {
    throw InvalidInstance("bad type_count_range");
  }
  if (profile.capacity_range.first < 1 || profile.capacity_range.second < profile.capacity_range.first) {
    throw InvalidInstance("bad capacity_range");
  }
  if (!(profile.demand_mean > 0.0)) throw InvalidInstance("demand_mean must be positive");
  if (!(profile.demand_dispersion >= 0.0)) throw InvalidInstance("demand_dispersion must be >= 0");

  // Log-normal with the requested mean: exp(mu + sigma^2/2) = demand_mean.
  const double sigma = profile.demand_dispersion;
  const double mu = std::log(profile.demand_mean) - 0.5 * sigma * sigma;

  const long klo = profile.type_count_range.first;
  const long khi = profile.type_count_range.second;
  const long clo = profile.capacity_range.first;
  const long chi = profile.capacity_range.second;

  RawInstance raw;
  raw.slots = profile.slots;
  const long ntypes = klo + static_cast<long>(rng.below(static_cast<std::uint64_t>(khi - klo + 1)));
  for (long i = 0; i < ntypes; ++i) {
    TypeSpec t;
    t.id = "T" + std::to_string(i + 1);
    t.capacity = std::min(profile.slots, clo + static_cast<long>(rng.below(static_cast<std::uint64_t>(chi - clo + 1))));
    double d = std::exp(mu + sigma * rng.next_normal());
    t.demand = std::max(1L, std::lround(d));
    raw.types.push_back(std::move(t));
  }
  return validate_instance(raw).instance;
}

TimestampLog synthesize_log(const Instance& inst, const BeltAssignment& b, long step_seconds,
                            const std::vector<std::pair<long, long>>& idle_spec, Rng& rng) {
  if (step_seconds < 1) throw Error("step_seconds must be positive");
  for (const auto& [after, gap] : idle_spec) {
    if (after < 0 || gap < 0) throw Error("idle_spec entries must be non-negative");
  }

  const long slots = b.slots();
  const long n = static_cast<long>(b.steps().size());

  TimestampLog log;
  log.job_id = "job";
  log.start_s = static_cast<long>(rng.below(86400));  // arbitrary day offset

  // Track which physical mould occupies each belt position so returns carry
  // the same mould id as their injection.
  std::vector<std::string> ring(static_cast<std::size_t>(slots));
  std::vector<long> used(inst.type_count(), 0);
  long last_step = -1;
  for (long i = 0; i < n; ++i) {
    TypeIndex t = b.steps()[static_cast<std::size_t>(i)];
    std::size_t r = static_cast<std::size_t>(i % slots);
    if (t == kEmptySlot) {
      ring[r].clear();
      continue;
    }
    if (i < slots || b.at(i - slots) != t) {
      ring[r] = inst.type(t).id + "#" + std::to_string(++used[t]);
    }
    long shift = 0;
    for (const auto& [after, gap] : idle_spec) {
      if (after < i) shift += gap;
    }
    log.events.push_back({log.start_s + (i + slots) * step_seconds + shift, ring[r], inst.type(t).id});
    last_step = i;
  }

  log.end_s = log.events.empty() ? log.start_s : log.events.back().time_s;
  for (const auto& [after, gap] : idle_spec) {
    if (after >= last_step) log.end_s += gap;  // halt after production ran out
  }
  return log;
}

namespace {

// Maximal event-free intervals of at least `threshold`, the start/first and
// last/end boundaries included.
std::vector<IdlePeriod> find_idle(const TimestampLog& log, long threshold) {
  std::vector<IdlePeriod> idle;
  long prev = log.start_s;
  for (const LogEvent& e : log.events) {
    if (e.time_s - prev >= threshold) idle.push_back({prev, e.time_s});
    prev = e.time_s;
  }
  if (log.end_s - prev >= threshold) idle.push_back({prev, log.end_s});
  return idle;
}

}  // namespace

IngestResult ingest_log(const TimestampLog& log, const Instance& declared, long idle_threshold_s) {
  if (log.events.empty()) throw EmptyLog("log '" + log.job_id + "' has no events");
  if (idle_threshold_s < 1) throw Error("idle threshold must be positive");
  if (!std::is_sorted(log.events.begin(), log.events.end(),
                      [](const LogEvent& a, const LogEvent& b) { return a.time_s < b.time_s; })) {
    throw Error("log events are not sorted by time");
  }

  std::vector<std::string> notes;

  TimestampLog bracketed = log;
  if (bracketed.start_s > bracketed.events.front().time_s) {
    notes.push_back("log start is after the first event; widened");
    bracketed.start_s = bracketed.events.front().time_s;
  }
  if (bracketed.end_s < bracketed.events.back().time_s) {
    notes.push_back("log end is before the last event; widened");
    bracketed.end_s = bracketed.events.back().time_s;
  }

  // Per-type tallies and per-mould first appearances, in event order.
  std::map<std::string, long> event_count;
  std::map<std::string, std::unordered_set<std::string>> moulds;
  std::vector<std::pair<std::string, std::string>> first_appearance;  // (mould, type)
  std::unordered_set<std::string> seen_moulds;
  for (const LogEvent& e : bracketed.events) {
    if (e.mould_id.empty() || e.type.empty()) throw Error("log event with empty mould or type");
    ++event_count[e.type];
    moulds[e.type].insert(e.mould_id);
    if (seen_moulds.insert(e.mould_id).second) first_appearance.push_back({e.mould_id, e.type});
  }

  // Reconcile: observed counts win over declared numbers.
  RawInstance raw;
  raw.slots = declared.slots();
  for (const TypeSpec& t : declared.types()) {
    auto it = event_count.find(t.id);
    if (it == event_count.end()) {
      notes.push_back("type '" + t.id + "' declared but never produced; dropped");
      continue;
    }
    TypeSpec r = t;
    if (it->second != t.demand) {
      notes.push_back("type '" + t.id + "': declared demand " + std::to_string(t.demand) +
                      ", log shows " + std::to_string(it->second));
      r.demand = it->second;
    }
    long distinct = static_cast<long>(moulds[t.id].size());
    if (distinct > t.capacity) {
      notes.push_back("type '" + t.id + "': declared capacity " + std::to_string(t.capacity) +
                      ", log uses " + std::to_string(distinct) + " moulds");
      r.capacity = distinct;
    }
    raw.types.push_back(std::move(r));
  }
  for (const auto& [mould, type] : first_appearance) {
    (void)mould;
    if (declared.find(type)) continue;
    bool known = false;
    for (const TypeSpec& t : raw.types) known = known || t.id == type;
    if (known) continue;
    long demand = event_count[type];
    long capacity = static_cast<long>(moulds[type].size());
    notes.push_back("type '" + type + "' produced but not declared; added with demand " +
                    std::to_string(demand) + ", capacity " + std::to_string(capacity));
    raw.types.push_back({type, demand, capacity});
  }

  ValidationResult validated = validate_instance(raw);
  for (const std::string& w : validated.warnings) notes.push_back(w);

  IngestResult out{validated.instance, {}, 0, 0, {}, {}};

  for (const auto& [mould, type] : first_appearance) {
    (void)mould;
    out.human_sequence.entries.push_back(*out.instance.find(type));
  }

  // Laps: a mould id seen again starts the next belt round. Moulds shared by
  // consecutive laps should come by in the same relative order; flag laps
  // where the press order changed.
  {
    std::vector<std::string> prev, cur;
    long lap = 1;
    auto check = [&]() {
      if (prev.empty() || cur.empty()) return;
      std::unordered_map<std::string, std::size_t> pos;
      for (std::size_t i = 0; i < prev.size(); ++i) pos[prev[i]] = i;
      std::size_t watermark = 0;
      bool first = true;
      for (const std::string& m : cur) {
        auto it = pos.find(m);
        if (it == pos.end()) continue;
        if (!first && it->second < watermark) {
          notes.push_back("mould order changed between laps " + std::to_string(lap - 1) + " and " +
                          std::to_string(lap));
          return;
        }
        watermark = it->second;
        first = false;
      }
    };
    std::unordered_set<std::string> in_cur;
    for (const LogEvent& e : bracketed.events) {
      if (!in_cur.insert(e.mould_id).second) {
        check();
        prev = std::move(cur);
        cur.clear();
        in_cur.clear();
        in_cur.insert(e.mould_id);
        ++lap;
      }
      cur.push_back(e.mould_id);
    }
    check();
  }

  out.idle_periods = find_idle(bracketed, idle_threshold_s);
  out.raw_time_s = bracketed.end_s - bracketed.start_s;
  long idle_total = 0;
  for (const IdlePeriod& p : out.idle_periods) idle_total += p.duration();
  out.adjusted_time_s = out.raw_time_s - idle_total;
  out.inconsistencies = std::move(notes);
  return out;
}

long computed_makespan(const IngestResult& result) {
  return makespan(decode(result.instance, result.human_sequence));
}

}  // namespace belt
