#include "belt/bounds.hpp"

#include <algorithm>

namespace belt {

long rounds_needed(const Instance& inst) {
  long r = 1;
  for (const TypeSpec& t : inst.types()) {
    r = std::max(r, (t.demand + t.capacity - 1) / t.capacity);
  }
  return r;
}

long lower_bound(const Instance& inst) {
  const long r = rounds_needed(inst);
  long spill = 0;
  for (const TypeSpec& t : inst.types()) {
    spill += std::max(0L, t.demand - (r - 1) * t.capacity);
  }
  const long by_rounds = (r - 1) * inst.slots() + spill;
  return std::max(inst.total_demand(), by_rounds) + inst.slots() - 1;
}

long worst_case_bound(const Instance& inst) {
  return (rounds_needed(inst) - 1) * inst.slots() + inst.total_demand() + inst.slots() - 1;
}

}  // namespace belt
