#include "belt/hardness.hpp"

#include <numeric>

#include "belt/solvers.hpp"

namespace belt {

ReductionOutput reduce_partition(const PartitionInstance& p, long slots) {
  if (slots < 2) throw InvalidSlots("reduction needs at least 2 slots");
  if (p.values.empty()) throw InvalidInstance("partition instance has no values");
  for (long v : p.values) {
    if (v < 1) throw InvalidInstance("partition values must be positive");
  }

  const long sum = std::accumulate(p.values.begin(), p.values.end(), 0L);
  ReductionOutput out;
  if (sum % 2 != 0) {
    out.trivially_no = true;
    return out;
  }

  const long half = sum / 2;
  RawInstance raw;
  raw.slots = slots;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    raw.types.push_back({std::to_string(i + 1), p.values[i], 1});
  }
  // Fillers occupy the other slots-2 positions every round, so the value
  // types must share the remaining two; finishing in threshold steps then
  // means splitting the values into two groups of sum/2 rounds each.
  for (long k = 0; k < slots - 2; ++k) {
    raw.types.push_back({"__filler_" + std::to_string(k + 1), half, 1});
  }
  out.instance = validate_instance(raw).instance;
  out.threshold = slots * half + slots - 1;
  return out;
}

bool subset_sum_oracle(const PartitionInstance& p) {
  if (p.values.empty()) throw InvalidInstance("partition instance has no values");
  for (long v : p.values) {
    if (v < 1) throw InvalidInstance("partition values must be positive");
  }
  const long sum = std::accumulate(p.values.begin(), p.values.end(), 0L);
  if (sum % 2 != 0) return false;
  const long half = sum / 2;

  std::vector<char> reachable(static_cast<std::size_t>(half) + 1, 0);
  reachable[0] = 1;
  for (long v : p.values) {
    for (long s = half; s >= v; --s) {
      if (reachable[static_cast<std::size_t>(s - v)]) reachable[static_cast<std::size_t>(s)] = 1;
    }
  }
  return reachable[static_cast<std::size_t>(half)] != 0;
}

bool decide_partition_via_belt(const PartitionInstance& p, long slots, long cap) {
  ReductionOutput red = reduce_partition(p, slots);
  if (red.trivially_no) return false;
  SolveResult opt = brute_force(*red.instance, cap);
  return opt.best_makespan == *red.threshold;
}

}  // namespace belt
