#include "belt/normal_form.hpp"

#include <algorithm>

#include "belt/errors.hpp"

namespace belt {

AssignmentReport check_assignment(const Instance& inst, const BeltAssignment& b) {
  const auto& steps = b.steps();
  const long n = static_cast<long>(steps.size());
  const long slots = b.slots();
  const std::size_t ntypes = inst.type_count();

  AssignmentReport rep;
  rep.cond_demand = rep.cond_persistence = rep.cond_capacity = true;
  rep.econom = rep.more_moulds = true;
  long anchor = -1;  // smallest violating step over all predicates
  auto violate = [&](bool& flag, long step) {
    flag = false;
    if (anchor < 0 || step < anchor) anchor = step;
  };

  // Demand: exact occurrence counts. Excess is anchored at the first step
  // past the demand, shortfall at the first implicitly-empty step.
  std::vector<long> total(ntypes, 0);
  {
    std::vector<long> running(ntypes, 0);
    bool excess = false;
    for (long i = 0; i < n && !excess; ++i) {
      TypeIndex t = steps[static_cast<std::size_t>(i)];
      if (t == kEmptySlot) continue;
      if (++running[t] == inst.type(t).demand + 1) {
        violate(rep.cond_demand, i);
        excess = true;
      }
    }
    for (long i = 0; i < n; ++i) {
      TypeIndex t = steps[static_cast<std::size_t>(i)];
      if (t != kEmptySlot) ++total[t];
    }
    if (!excess) {
      for (std::size_t t = 0; t < ntypes; ++t) {
        if (total[t] != inst.type(static_cast<TypeIndex>(t)).demand) {
          violate(rep.cond_demand, n);
          break;
        }
      }
    }
  }

  // Persistence: a mould fed at i must be back at i+N unless its type's
  // demand completed within 0..i+N-1. Rolling window count up to i+N-1.
  {
    std::vector<long> upto(ntypes, 0);  // occurrences in steps 0..scan
    long scan = -1;
    for (long i = 0; i < n; ++i) {
      TypeIndex t = steps[static_cast<std::size_t>(i)];
      if (t == kEmptySlot) continue;
      while (scan < std::min(i + slots - 1, n - 1)) {
        ++scan;
        TypeIndex u = steps[static_cast<std::size_t>(scan)];
        if (u != kEmptySlot) ++upto[u];
      }
      if (b.at(i + slots) != t && upto[t] != inst.type(t).demand) {
        violate(rep.cond_persistence, i);
        break;
      }
    }
  }

  // Capacity: injections per type, anchored at the first over-capacity one.
  std::vector<InjectionEvent> inj = injections(b);
  std::vector<long> used(ntypes, 0);
  for (const InjectionEvent& e : inj) {
    if (++used[e.type] == inst.type(e.type).capacity + 1 && rep.cond_capacity) {
      violate(rep.cond_capacity, e.step);
    }
  }

  long first_empty = -1;
  for (long i = 0; i < n; ++i) {
    if (steps[static_cast<std::size_t>(i)] == kEmptySlot) {
      first_empty = i;
      break;
    }
  }

  // Economy: no injection at or after an empty step.
  if (first_empty >= 0 && !inj.empty() && inj.back().step >= first_empty) {
    violate(rep.econom, first_empty);
  }

  // Spare moulds: a type using fewer than capacity moulds must not appear at
  // or after an empty step.
  if (first_empty >= 0) {
    for (long i = n - 1; i >= first_empty; --i) {
      TypeIndex t = steps[static_cast<std::size_t>(i)];
      if (t != kEmptySlot && used[t] < inst.type(t).capacity) {
        violate(rep.more_moulds, first_empty);
        break;
      }
    }
  }

  if (anchor >= 0) rep.first_violation = anchor;
  return rep;
}

InjectionSequence short_injection_sequence(const Instance& inst, const BeltAssignment& b) {
  AssignmentReport rep = check_assignment(inst, b);
  if (!rep.econom || !rep.more_moulds) {
    throw NotNormalForm("assignment is not in normal form; no injection order reproduces it");
  }
  InjectionSequence seq;
  for (const InjectionEvent& e : injections(b)) seq.entries.push_back(e.type);
  return seq;
}

}  // namespace belt
