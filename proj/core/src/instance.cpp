#include "belt/instance.hpp"

#include <unordered_set>

namespace belt {

std::optional<TypeIndex> Instance::find(std::string_view id) const {
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types_[i].id == id) return static_cast<TypeIndex>(i);
  }
  return std::nullopt;
}

ValidationResult validate_instance(const RawInstance& raw) {
  if (raw.slots < 1) throw InvalidInstance("slot count must be at least 1");
  if (raw.types.empty()) throw InvalidInstance("instance has no types");

  ValidationResult out;
  std::unordered_set<std::string> seen;
  for (const TypeSpec& t : raw.types) {
    if (t.id.empty()) throw InvalidInstance("type with empty id");
    if (!seen.insert(t.id).second) throw InvalidInstance("duplicate type id '" + t.id + "'");
    if (t.demand < 1) throw InvalidInstance("type '" + t.id + "' has non-positive demand");
    if (t.capacity < 1) throw InvalidInstance("type '" + t.id + "' has non-positive capacity");
  }

  Instance inst;
  inst.slots_ = raw.slots;
  inst.types_ = raw.types;
  for (TypeSpec& t : inst.types_) {
    if (t.capacity > raw.slots) {
      // More moulds than belt positions can never circulate; clamp.
      out.warnings.push_back("type '" + t.id + "': capacity " + std::to_string(t.capacity) +
                             " exceeds slot count, clamped to " + std::to_string(raw.slots));
      t.capacity = raw.slots;
    }
    inst.total_demand_ += t.demand;
    inst.total_moulds_ += t.capacity;
    inst.total_active_ += t.active_moulds();
  }
  out.instance = std::move(inst);
  return out;
}

}  // namespace belt
