#pragma once

#include "belt/instance.hpp"

namespace belt {

// Rounds the busiest type needs: r* = max over types of ceil(demand/capacity).
long rounds_needed(const Instance& inst);

// No schedule finishes earlier than
//   max{ sum of demands, (r*-1)*N + sum of spill } + N - 1,
// where spill_A = max(0, d_A - (r*-1)*c_A) is what type A must still produce
// in the final round.
long lower_bound(const Instance& inst);

// No decoded sequence finishes later than (r*-1)*N + sum of demands + N - 1.
// Always at most twice lower_bound.
long worst_case_bound(const Instance& inst);

}  // namespace belt
