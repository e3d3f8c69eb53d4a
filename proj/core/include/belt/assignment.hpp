#pragma once

#include <limits>
#include <vector>

#include "belt/instance.hpp"

namespace belt {

// Empty belt position. Steps past the stored prefix are implicitly empty.
inline constexpr TypeIndex kEmptySlot = std::numeric_limits<TypeIndex>::max();

// What the belt did over time: steps[i] is the type fed in at step i, or
// kEmptySlot. The stored prefix is trimmed so its last entry is non-empty.
// demands_met records whether every type reached its demand, judged against
// the instance the assignment was built from.
class BeltAssignment {
 public:
  BeltAssignment(const Instance& inst, std::vector<TypeIndex> steps);

  long slots() const { return slots_; }
  const std::vector<TypeIndex>& steps() const { return steps_; }
  bool demands_met() const { return demands_met_; }

  // steps()[i] with the implicit empty tail.
  TypeIndex at(long i) const {
    return (i >= 0 && i < static_cast<long>(steps_.size())) ? steps_[static_cast<std::size_t>(i)]
                                                            : kEmptySlot;
  }

  bool operator==(const BeltAssignment&) const = default;

 private:
  long slots_ = 0;
  std::vector<TypeIndex> steps_;
  bool demands_met_ = false;
};

struct InjectionEvent {
  long step = 0;
  TypeIndex type = kEmptySlot;

  bool operator==(const InjectionEvent&) const = default;
};

// Items finished per belt round r, i.e. non-empty steps in [r*N, r*N + N - 1].
using LoadProfile = std::vector<long>;

// Completion time: last non-empty step index plus N (the mould fed in at that
// step still has to traverse the belt). Throws IncompleteAssignment if some
// demand is unmet.
long makespan(const BeltAssignment& b);

// Steps where a fresh mould enters: b(i) non-empty and no mould of the same
// type returned from step i - N.
std::vector<InjectionEvent> injections(const BeltAssignment& b);

// Moulds of a given type that were actually used = its injection count.
std::vector<long> moulds_used(const Instance& inst, const BeltAssignment& b);

LoadProfile load_profile(const BeltAssignment& b);

}  // namespace belt
