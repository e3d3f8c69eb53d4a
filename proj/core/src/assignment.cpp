#include "belt/assignment.hpp"

#include "belt/errors.hpp"

namespace belt {

BeltAssignment::BeltAssignment(const Instance& inst, std::vector<TypeIndex> steps)
    : slots_(inst.slots()), steps_(std::move(steps)) {
  while (!steps_.empty() && steps_.back() == kEmptySlot) steps_.pop_back();

  std::vector<long> counts(inst.type_count(), 0);
  for (TypeIndex t : steps_) {
    if (t == kEmptySlot) continue;
    if (t >= inst.type_count()) throw Error("assignment step refers to unknown type index");
    ++counts[t];
  }
  demands_met_ = true;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != inst.type(static_cast<TypeIndex>(i)).demand) {
      demands_met_ = false;
      break;
    }
  }
}

long makespan(const BeltAssignment& b) {
  if (!b.demands_met()) throw IncompleteAssignment("makespan of an assignment with unmet demands");
  // Construction trims the prefix, so the last stored step is non-empty.
  return static_cast<long>(b.steps().size()) - 1 + b.slots();
}

std::vector<InjectionEvent> injections(const BeltAssignment& b) {
  std::vector<InjectionEvent> events;
  const long n = static_cast<long>(b.steps().size());
  for (long i = 0; i < n; ++i) {
    TypeIndex t = b.steps()[static_cast<std::size_t>(i)];
    if (t == kEmptySlot) continue;
    if (i < b.slots() || b.at(i - b.slots()) != t) events.push_back({i, t});
  }
  return events;
}

std::vector<long> moulds_used(const Instance& inst, const BeltAssignment& b) {
  std::vector<long> used(inst.type_count(), 0);
  for (const InjectionEvent& e : injections(b)) ++used[e.type];
  return used;
}

LoadProfile load_profile(const BeltAssignment& b) {
  const long n = static_cast<long>(b.steps().size());
  LoadProfile loads;
  if (n == 0) return loads;
  loads.assign(static_cast<std::size_t>((n - 1) / b.slots() + 1), 0);
  for (long i = 0; i < n; ++i) {
    if (b.steps()[static_cast<std::size_t>(i)] != kEmptySlot) {
      ++loads[static_cast<std::size_t>(i / b.slots())];
    }
  }
  return loads;
}

}  // namespace belt
