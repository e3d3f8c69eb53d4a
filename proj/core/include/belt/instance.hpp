#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "belt/errors.hpp"

namespace belt {

// Types are referenced by dense index almost everywhere; the string id only
// matters at the I/O boundary.
using TypeIndex = std::uint32_t;

struct TypeSpec {
  std::string id;
  long demand = 0;    // items to produce, d >= 1
  long capacity = 0;  // moulds available, 1 <= c <= slots

  // Moulds a run can actually put on the belt. Each placement yields one item,
  // so moulds beyond the demand would never be injected.
  long active_moulds() const { return std::min(demand, capacity); }
};

// A job before validation, exactly as read from a file or built by a caller.
struct RawInstance {
  long slots = 0;
  std::vector<TypeSpec> types;
};

struct ValidationResult;

// Validated, immutable job description.
class Instance {
 public:
  long slots() const { return slots_; }
  const std::vector<TypeSpec>& types() const { return types_; }
  std::size_t type_count() const { return types_.size(); }
  const TypeSpec& type(TypeIndex t) const { return types_[t]; }

  long total_demand() const { return total_demand_; }
  long total_moulds() const { return total_moulds_; }
  // Length of a full injection sequence: sum of active_moulds over all types.
  long total_active_moulds() const { return total_active_; }

  std::optional<TypeIndex> find(std::string_view id) const;

  friend struct ValidationResult;
  friend ValidationResult validate_instance(const RawInstance& raw);

 private:
  Instance() = default;
  long slots_ = 0;
  std::vector<TypeSpec> types_;
  long total_demand_ = 0;
  long total_moulds_ = 0;
  long total_active_ = 0;
};

struct ValidationResult {
  Instance instance;
  std::vector<std::string> warnings;
};

// Checks slots >= 1, at least one type, unique non-empty ids, demands >= 1,
// capacities >= 1. A capacity above the slot count is physically meaningless
// (the belt holds N moulds at once) and is clamped to slots with a warning.
// Throws InvalidInstance otherwise.
ValidationResult validate_instance(const RawInstance& raw);

}  // namespace belt
