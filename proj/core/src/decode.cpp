#include "belt/decode.hpp"

#include <algorithm>

#include "belt/errors.hpp"

namespace belt {

BeltAssignment decode(const Instance& inst, const InjectionSequence& seq) {
  validate_sequence(inst, seq);

  const long slots = inst.slots();
  const long total = inst.total_demand();
  // Every round up to completion feeds at least one mould (an unfinished type
  // keeps returning every N steps), so a valid decode never gets near this.
  const long guard = slots * total + slots;

  std::vector<TypeIndex> steps;
  std::vector<long> counts(inst.type_count(), 0);
  std::size_t next = 0;
  long placed = 0;

  for (long i = 0; placed < total; ++i) {
    if (i > guard) throw Error("decode overran its step guard");
    TypeIndex cand = i >= slots ? steps[static_cast<std::size_t>(i - slots)] : kEmptySlot;
    // Returning mould gone or done: feed the next pending entry whose type
    // still has open demand, nothing once the sequence is spent.
    while (cand == kEmptySlot || counts[cand] == inst.type(cand).demand) {
      if (next >= seq.entries.size()) {
        cand = kEmptySlot;
        break;
      }
      cand = seq.entries[next++];
    }
    steps.push_back(cand);
    if (cand != kEmptySlot) {
      ++counts[cand];
      ++placed;
    }
  }
  return BeltAssignment(inst, std::move(steps));
}

MakespanEvaluator::MakespanEvaluator(const Instance& inst)
    : inst_(&inst),
      slots_(inst.slots()),
      total_demand_(inst.total_demand()),
      remaining_(inst.type_count(), 0),
      ring_(static_cast<std::size_t>(inst.slots()), kEmptySlot) {
  residues_.reserve(ring_.size() * 2);
}

long MakespanEvaluator::operator()(std::span<const TypeIndex> entries) {
  const long slots = slots_;
  for (std::size_t t = 0; t < remaining_.size(); ++t) {
    remaining_[t] = inst_->type(static_cast<TypeIndex>(t)).demand;
  }
  std::fill(ring_.begin(), ring_.end(), kEmptySlot);

  long placed = 0;
  std::size_t next = 0;
  long i = 0;

  // While entries are pending every step feeds a mould, so this runs at most
  // total_demand_ times.
  for (;; ++i) {
    std::size_t r = static_cast<std::size_t>(i % slots);
    TypeIndex cand = i >= slots ? ring_[r] : kEmptySlot;
    while (cand == kEmptySlot || remaining_[cand] == 0) {
      if (next >= entries.size()) {
        cand = kEmptySlot;
        break;
      }
      cand = entries[next++];
    }
    if (cand == kEmptySlot) {
      ring_[r] = kEmptySlot;  // sequence exhausted; switch to lap mode
      break;
    }
    ring_[r] = cand;
    --remaining_[cand];
    if (++placed == total_demand_) return i + slots;
  }

  // Only returning moulds remain. Walk occupied residues lap by lap instead
  // of stepping through the empty positions one at a time. residues_ holds
  // (offset within the lap, type) pairs in visiting order from step i + 1.
  residues_.clear();
  for (long off = 0; off < slots; ++off) {
    std::size_t r = static_cast<std::size_t>((i + 1 + off) % slots);
    if (ring_[r] != kEmptySlot) {
      residues_.push_back(static_cast<TypeIndex>(off));
      residues_.push_back(ring_[r]);
    }
  }

  long lap_base = i + 1;
  while (!residues_.empty()) {
    std::size_t kept = 0;
    for (std::size_t k = 0; k < residues_.size(); k += 2) {
      TypeIndex off = residues_[k];
      TypeIndex type = residues_[k + 1];
      if (remaining_[type] == 0) continue;  // done: mould leaves, slot stays empty
      --remaining_[type];
      if (++placed == total_demand_) return lap_base + off + slots;
      residues_[kept++] = off;
      residues_[kept++] = type;
    }
    residues_.resize(kept);
    lap_base += slots;
  }

  throw MissingType("sequence exhausted with unmet demand");
}

}  // namespace belt
