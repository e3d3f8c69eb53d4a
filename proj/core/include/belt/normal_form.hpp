#pragma once

#include <optional>

#include "belt/assignment.hpp"
#include "belt/sequence.hpp"

namespace belt {

// Literal evaluation of the belt feasibility conditions and the two normal
// form properties on the stored prefix (steps beyond it count as empty):
//   cond_demand       every type appears exactly demand-many times
//   cond_persistence  a mould fed at step i returns at i+N unless its type's
//                     demand is complete within steps 0..i+N-1
//   cond_capacity     injections per type <= capacity
//   econom            every empty step comes after every injection
//   more_moulds       a type using fewer than capacity moulds never appears
//                     at or after an empty step
// first_violation is the smallest offending step over all failed flags
// (demand shortfalls are anchored at the first implicitly-empty step).
struct AssignmentReport {
  bool cond_demand = false;
  bool cond_persistence = false;
  bool cond_capacity = false;
  bool econom = false;
  bool more_moulds = false;
  std::optional<long> first_violation;

  bool all_ok() const {
    return cond_demand && cond_persistence && cond_capacity && econom && more_moulds;
  }
};

AssignmentReport check_assignment(const Instance& inst, const BeltAssignment& b);

// Injection order of a normal-form assignment; decoding it reproduces the
// assignment step for step. Throws NotNormalForm if econom or more_moulds
// fails.
InjectionSequence short_injection_sequence(const Instance& inst, const BeltAssignment& b);

}  // namespace belt
