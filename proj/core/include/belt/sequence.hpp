#pragma once

#include <vector>

#include "belt/instance.hpp"

namespace belt {

// Order in which moulds are fed onto the belt. An entry per mould, not per
// item: a full sequence holds every type exactly active_moulds-many times, a
// short sequence at least once and at most capacity-many times.
struct InjectionSequence {
  std::vector<TypeIndex> entries;

  bool operator==(const InjectionSequence&) const = default;
};

// Throws MissingType if some instance type never occurs, CapacityExceeded if
// one occurs more than capacity-many times.
void validate_sequence(const Instance& inst, const InjectionSequence& seq);

bool is_full_sequence(const Instance& inst, const InjectionSequence& seq);

}  // namespace belt
