#pragma once

#include <optional>
#include <vector>

#include "belt/instance.hpp"

namespace belt {

// Input to the Partition reduction: positive integers, order irrelevant.
struct PartitionInstance {
  std::vector<long> values;
};

// Belt instance whose optimal makespan answers the Partition question.
// trivially_no is set (and instance/threshold omitted) when the value sum is
// odd. Otherwise the values become one type each (demand = value, capacity 1)
// plus slots-2 filler types of demand sum/2 and capacity 1, and the Partition
// answer is "yes" exactly when some schedule finishes in
// threshold = slots * sum/2 + slots - 1 steps.
struct ReductionOutput {
  bool trivially_no = false;
  std::optional<Instance> instance;
  std::optional<long> threshold;
};

// Throws InvalidSlots if slots < 2, InvalidInstance for empty or non-positive
// values. Filler ids are "__filler_k"; value ids are their 1-based position.
ReductionOutput reduce_partition(const PartitionInstance& p, long slots);

// Independent check: classic subset-sum DP for "can the values split in half".
bool subset_sum_oracle(const PartitionInstance& p);

// Decides Partition through the belt: brute-forces the reduced instance and
// compares the optimum with the threshold. cap bounds the enumeration
// (TooLarge beyond it). Must always agree with subset_sum_oracle.
bool decide_partition_via_belt(const PartitionInstance& p, long slots, long cap = 1000000);

}  // namespace belt
