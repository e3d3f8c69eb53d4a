#pragma once

#include <span>

#include "belt/assignment.hpp"
#include "belt/sequence.hpp"

namespace belt {

// Simulates the belt for an injection order (steps are 0-based):
// at step i the mould from step i - N returns; if it is missing or its type's
// demand is complete, the next pending sequence entry whose demand is still
// open is fed in instead (nothing once the sequence is exhausted). Stops when
// all demands are met. Validates seq first (MissingType / CapacityExceeded).
BeltAssignment decode(const Instance& inst, const InjectionSequence& seq);

// Makespan of decode(inst, seq) without materialising the assignment.
// One instance of this class is meant to be reused across many sequences;
// solvers call it millions of times. Skips whole empty stretches once the
// sequence is exhausted, so a run costs O(total demand + N + seq length)
// rather than O(makespan). Sequences are assumed valid (callers that take
// untrusted input should run validate_sequence once).
class MakespanEvaluator {
 public:
  explicit MakespanEvaluator(const Instance& inst);

  long operator()(std::span<const TypeIndex> entries);
  long operator()(const InjectionSequence& seq) { return (*this)(std::span(seq.entries)); }

 private:
  const Instance* inst_;
  long slots_;
  long total_demand_;
  std::vector<long> remaining_;
  std::vector<TypeIndex> ring_;
  std::vector<TypeIndex> residues_;  // scratch for the post-exhaustion laps
};

}  // namespace belt
