#include "belt/sequence.hpp"

#include "belt/errors.hpp"

namespace belt {

static std::vector<long> occurrence_counts(const Instance& inst, const InjectionSequence& seq) {
  std::vector<long> counts(inst.type_count(), 0);
  for (TypeIndex t : seq.entries) {
    if (t >= inst.type_count()) throw Error("sequence entry refers to unknown type index");
    ++counts[t];
  }
  return counts;
}

void validate_sequence(const Instance& inst, const InjectionSequence& seq) {
  std::vector<long> counts = occurrence_counts(inst, seq);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const TypeSpec& t = inst.type(static_cast<TypeIndex>(i));
    if (counts[i] == 0) throw MissingType("type '" + t.id + "' missing from sequence");
    if (counts[i] > t.capacity) {
      throw CapacityExceeded("type '" + t.id + "' occurs " + std::to_string(counts[i]) +
                             " times but has only " + std::to_string(t.capacity) + " moulds");
    }
  }
}

bool is_full_sequence(const Instance& inst, const InjectionSequence& seq) {
  std::vector<long> counts = occurrence_counts(inst, seq);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != inst.type(static_cast<TypeIndex>(i)).active_moulds()) return false;
  }
  return true;
}

}  // namespace belt
