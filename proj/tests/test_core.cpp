#include <doctest.h>

#include "test_helpers.hpp"

using namespace belt;
using test::ids_of;
using test::make_instance;
using test::seq_of;
using test::steps_of;

TEST_CASE("validate_instance rejects broken input") {
  CHECK_THROWS_AS(validate_instance({0, {{"A", 1, 1}}}), InvalidInstance);
  CHECK_THROWS_AS(validate_instance({3, {}}), InvalidInstance);
  CHECK_THROWS_AS(validate_instance({3, {{"", 1, 1}}}), InvalidInstance);
  CHECK_THROWS_AS(validate_instance({3, {{"A", 1, 1}, {"A", 2, 1}}}), InvalidInstance);
  CHECK_THROWS_AS(validate_instance({3, {{"A", 0, 1}}}), InvalidInstance);
  CHECK_THROWS_AS(validate_instance({3, {{"A", -2, 1}}}), InvalidInstance);
  CHECK_THROWS_AS(validate_instance({3, {{"A", 1, 0}}}), InvalidInstance);
}

TEST_CASE("validate_instance clamps capacity to the slot count") {
  ValidationResult v = validate_instance({2, {{"A", 1, 5}}});
  CHECK(v.instance.type(0).capacity == 2);
  REQUIRE(v.warnings.size() == 1);
  CHECK(v.warnings[0].find("clamped") != std::string::npos);

  ValidationResult clean = validate_instance({3, {{"A", 2, 1}, {"B", 2, 1}}});
  CHECK(clean.warnings.empty());
  CHECK(clean.instance.total_demand() == 4);
  CHECK(clean.instance.total_moulds() == 2);
}

TEST_CASE("decode: two singles alternating, one empty gap") {
  Instance inst = make_instance(3, {{"A", 2, 1}, {"B", 2, 1}});
  BeltAssignment b = decode(inst, seq_of(inst, {"A", "B"}));
  CHECK(ids_of(inst, b) == std::vector<std::string>{"A", "B", "", "A", "B"});
  CHECK(makespan(b) == 7);
  CHECK(injections(b) == std::vector<InjectionEvent>{{0, 0}, {1, 1}});
  CHECK(load_profile(b) == LoadProfile{2, 2});
}

TEST_CASE("decode: uneven demands keep the belt busy") {
  Instance inst = make_instance(3, {{"A", 4, 2}, {"B", 3, 1}});
  BeltAssignment b = decode(inst, seq_of(inst, {"B", "A", "A"}));
  CHECK(ids_of(inst, b) == std::vector<std::string>{"B", "A", "A", "B", "A", "A", "B"});
  CHECK(makespan(b) == 9);
  CHECK(injections(b) == std::vector<InjectionEvent>{{0, 1}, {1, 0}, {2, 0}});
  CHECK(load_profile(b) == LoadProfile{3, 3, 1});
}

TEST_CASE("decode: single item still rides the whole belt") {
  Instance inst = make_instance(20, {{"A", 1, 1}});
  BeltAssignment b = decode(inst, seq_of(inst, {"A"}));
  CHECK(ids_of(inst, b) == std::vector<std::string>{"A"});
  CHECK(makespan(b) == 20);
}

TEST_CASE("decode validates the sequence") {
  Instance inst = make_instance(3, {{"A", 2, 1}, {"B", 2, 1}});
  CHECK_THROWS_AS(decode(inst, seq_of(inst, {"A"})), MissingType);
  CHECK_THROWS_AS(decode(inst, seq_of(inst, {"A", "B", "A"})), CapacityExceeded);
}

TEST_CASE("makespan of a gap-free schedule is demand plus belt length minus one") {
  Instance inst = make_instance(3, {{"A", 3, 3}});
  BeltAssignment b = decode(inst, seq_of(inst, {"A", "A", "A"}));
  CHECK(makespan(b) == 5);
}

TEST_CASE("makespan refuses assignments with open demand") {
  Instance inst = make_instance(3, {{"A", 2, 1}});
  BeltAssignment partial(inst, steps_of(inst, {"A"}));
  CHECK_FALSE(partial.demands_met());
  CHECK_THROWS_AS(makespan(partial), IncompleteAssignment);
}

TEST_CASE("assignment trims trailing empties and reads beyond the prefix as empty") {
  Instance inst = make_instance(2, {{"A", 2, 1}});
  std::vector<TypeIndex> raw = steps_of(inst, {"A", "", "A", "", ""});
  BeltAssignment b(inst, raw);
  CHECK(b.steps().size() == 3);
  CHECK(b.at(1) == kEmptySlot);
  CHECK(b.at(3) == kEmptySlot);
  CHECK(b.at(-1) == kEmptySlot);
  CHECK(makespan(b) == 4);
}

TEST_CASE("lower_bound matches hand-computed cases") {
  CHECK(lower_bound(make_instance(20, {{"A", 1, 1}})) == 20);
  CHECK(lower_bound(make_instance(3, {{"A", 4, 2}, {"B", 3, 1}})) == 9);
  CHECK(lower_bound(make_instance(3, {{"A", 2, 1}, {"B", 2, 1}})) == 7);
}

TEST_CASE("worst_case_bound matches hand-computed cases") {
  CHECK(worst_case_bound(make_instance(3, {{"A", 4, 2}, {"B", 3, 1}})) == 15);
  CHECK(worst_case_bound(make_instance(20, {{"A", 1, 1}})) == 20);
  CHECK(worst_case_bound(make_instance(3, {{"A", 2, 1}, {"B", 2, 1}})) == 9);
}

TEST_CASE("check_assignment: clean persistence run") {
  Instance inst = make_instance(2, {{"A", 2, 1}});
  AssignmentReport rep = check_assignment(inst, BeltAssignment(inst, steps_of(inst, {"A", "", "A"})));
  CHECK(rep.all_ok());
  CHECK_FALSE(rep.first_violation.has_value());
}

TEST_CASE("check_assignment: leading hole breaks economy") {
  Instance inst = make_instance(2, {{"A", 2, 2}});
  AssignmentReport rep = check_assignment(inst, BeltAssignment(inst, steps_of(inst, {"", "A", "A"})));
  CHECK_FALSE(rep.econom);
  CHECK(rep.cond_demand);
  CHECK(rep.cond_persistence);
  CHECK(rep.cond_capacity);
  CHECK(rep.more_moulds);
  REQUIRE(rep.first_violation.has_value());
  CHECK(*rep.first_violation == 0);
}

TEST_CASE("check_assignment: demand excess and broken persistence") {
  Instance inst = make_instance(2, {{"A", 2, 2}});
  AssignmentReport rep = check_assignment(inst, BeltAssignment(inst, steps_of(inst, {"A", "A", "A"})));
  CHECK_FALSE(rep.cond_demand);
  CHECK_FALSE(rep.cond_persistence);  // the step-1 mould vanishes with the count off
  CHECK(rep.cond_capacity);
  REQUIRE(rep.first_violation.has_value());
  CHECK(*rep.first_violation == 1);
}

TEST_CASE("check_assignment: shortfall anchors at the first implicit empty step") {
  Instance inst = make_instance(2, {{"A", 2, 2}});
  AssignmentReport rep = check_assignment(inst, BeltAssignment(inst, steps_of(inst, {"A"})));
  CHECK_FALSE(rep.cond_demand);
  CHECK_FALSE(rep.cond_persistence);
  REQUIRE(rep.first_violation.has_value());
  CHECK(*rep.first_violation == 0);  // persistence already fails at step 0
}

TEST_CASE("check_assignment: too many fresh moulds") {
  Instance inst = make_instance(2, {{"A", 2, 1}});
  AssignmentReport rep = check_assignment(inst, BeltAssignment(inst, steps_of(inst, {"A", "A"})));
  CHECK(rep.cond_demand);
  CHECK(rep.cond_persistence);
  CHECK_FALSE(rep.cond_capacity);
  REQUIRE(rep.first_violation.has_value());
  CHECK(*rep.first_violation == 1);
}

TEST_CASE("decode output of a full sequence is normal form and round-trips") {
  Instance inst = make_instance(3, {{"A", 4, 2}, {"B", 3, 1}});
  BeltAssignment b = decode(inst, seq_of(inst, {"B", "A", "A"}));
  CHECK(check_assignment(inst, b).all_ok());
  InjectionSequence shortseq = short_injection_sequence(inst, b);
  CHECK(ids_of(inst, shortseq) == std::vector<std::string>{"B", "A", "A"});
  CHECK(decode(inst, shortseq) == b);
}

TEST_CASE("short_injection_sequence refuses non-normal-form input") {
  Instance inst = make_instance(2, {{"A", 2, 2}});
  BeltAssignment b(inst, steps_of(inst, {"", "A", "A"}));
  CHECK_THROWS_AS(short_injection_sequence(inst, b), NotNormalForm);
}

// A valid sequence that uses fewer moulds than capacity can leave a spare-
// mould type returning after an empty step; that decode output is *not*
// normal form. Full sequences never hit this.
TEST_CASE("decode of a sub-capacity sequence may violate the spare-mould property") {
  Instance inst = make_instance(3, {{"A", 5, 2}, {"B", 1, 1}});
  BeltAssignment b = decode(inst, seq_of(inst, {"A", "B"}));
  CHECK(ids_of(inst, b) ==
        std::vector<std::string>{"A", "B", "", "A", "", "", "A", "", "", "A", "", "", "A"});
  AssignmentReport rep = check_assignment(inst, b);
  CHECK(rep.cond_demand);
  CHECK(rep.cond_persistence);
  CHECK(rep.cond_capacity);
  CHECK_FALSE(rep.more_moulds);
  CHECK_THROWS_AS(short_injection_sequence(inst, b), NotNormalForm);
}

TEST_CASE("properties: decode on random full sequences") {
  Rng rng(42);
  for (int iter = 0; iter < 500; ++iter) {
    Instance inst = test::random_instance(rng);
    InjectionSequence seq = uniform_sequence(inst, rng);
    BeltAssignment b = decode(inst, seq);

    // normal form, bounds sandwich, per-type injection caps, load conservation
    CHECK(check_assignment(inst, b).all_ok());
    long m = makespan(b);
    CHECK(m >= lower_bound(inst));
    CHECK(m <= worst_case_bound(inst));
    CHECK(worst_case_bound(inst) <= 2 * lower_bound(inst));

    std::vector<long> used = moulds_used(inst, b);
    for (TypeIndex t = 0; t < inst.type_count(); ++t) {
      CHECK(used[t] <= inst.type(t).capacity);
      CHECK(used[t] >= 1);
    }

    long finished = 0;
    for (long l : load_profile(b)) {
      CHECK(l >= 0);
      CHECK(l <= inst.slots());
      finished += l;
    }
    CHECK(finished == inst.total_demand());

    // short sequence round-trip
    InjectionSequence shortseq = short_injection_sequence(inst, b);
    CHECK(decode(inst, shortseq) == b);

    // fast path agrees with the literal decoder
    MakespanEvaluator fresh(inst);
    CHECK(fresh(seq) == m);
    CHECK(fresh(shortseq) == m);
  }
}

TEST_CASE("single-type instances meet the lower bound exactly") {
  for (long slots : {2L, 3L, 5L, 20L}) {
    for (long c = 1; c <= slots; ++c) {
      for (long d : {1L, 2L, 3L, 7L, 19L}) {
        Instance inst = make_instance(slots, {{"A", d, c}});
        InjectionSequence full;
        full.entries.assign(static_cast<std::size_t>(c), 0);
        CHECK(makespan(decode(inst, full)) == lower_bound(inst));
      }
    }
  }
}

TEST_CASE("decode handles demand far above capacity") {
  // One mould circling a big belt: items finish N steps apart.
  Instance inst = make_instance(5, {{"A", 100, 1}});
  InjectionSequence seq = seq_of(inst, {"A"});
  BeltAssignment b = decode(inst, seq);
  CHECK(makespan(b) == 99 * 5 + 5);
  CHECK(makespan(b) == lower_bound(inst));
  MakespanEvaluator eval(inst);
  CHECK(eval(seq) == makespan(b));
}
