#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "axcat/execution.hpp"
#include "axcat/relation.hpp"

namespace axcat {

enum class Axiom : std::uint8_t {
  kScPerLocation1,  // acyclic(pol ∪ com)
  kScPerLocation2,  // x pol y ⟹ ¬(y com⁺ x)
  kFivePatterns,    // none of the five coherence shapes occurs
  kFullSC,          // acyclic(po ∪ com)
  kNoThinAir,       // acyclic(hb)
  kObservation,     // irreflexive(fre ; prop ; hb*)
  kPropagation,     // acyclic(co ∪ prop)
};

std::string_view to_string(Axiom a);

// The five coherence shapes, each a pol edge closed by one com⁺ step.
enum class Pattern : std::uint8_t {
  kCoWW,      // w1 pol w2, w2 co w1
  kCoRWrf,    // r pol w, w rf r
  kCoWRfr,    // w pol r, r fr w
  kCoRWcorf,  // r pol w1, w1 co w2, w2 rf r
  kCoRRfrrf,  // r1 pol r2, r2 fr w, w rf r1
};

std::string_view to_string(Pattern p);

// `events` lists the pattern as a cycle: events[0] pol events[1], then com
// edges back to events[0].
struct PatternInstance {
  Pattern pattern;
  std::vector<EventId> events;

  friend bool operator==(const PatternInstance&, const PatternInstance&) = default;
};

// first pol second, second com⁺ first.
struct EventPair {
  EventId first;
  EventId second;

  friend bool operator==(const EventPair&, const EventPair&) = default;
};

// An event related to itself by the relation under test.
struct FixedPoint {
  EventId event;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

using Witness = std::variant<CycleWitness, PatternInstance, EventPair, FixedPoint>;

struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

struct ArchitectureResult {
  Relation ppo;
  Relation fence;
  Relation prop;
};

struct Architecture {
  std::string name;
  std::function<ArchitectureResult(const Execution&)> derive;
};

// Sample architectures. They are schematic, not models of real hardware.
//
//   "sc": ppo = po, fence = ∅, prop = co ∪ (com⁺ restricted to writes)
//   "sb": ppo = po minus write-to-read pairs, fence = ∅, prop = co
Architecture sc_architecture();
Architecture store_buffer_architecture();
std::optional<Architecture> find_architecture(std::string_view name);
std::vector<std::string> architecture_names();

// Throws UsageError unless ppo ⊆ po and prop relates only writes.
void validate_architecture_result(const Execution& e, const ArchitectureResult& r);

// Runs the architecture and validates its result.
ArchitectureResult apply_architecture(const Architecture& arch, const Execution& e);

// hb = ppo ∪ fence ∪ rfe
Relation happens_before(const DerivedRelations& d, const ArchitectureResult& r);

// Every operation below requires a well-formed execution; the overloads
// without DerivedRelations validate and throw UsageError otherwise.

AxiomVerdict sc_full(const Execution& e);
AxiomVerdict sc_full(const Execution& e, const DerivedRelations& d);

AxiomVerdict sc_per_location_1(const Execution& e);
AxiomVerdict sc_per_location_1(const Execution& e, const DerivedRelations& d);

AxiomVerdict sc_per_location_2(const Execution& e);
AxiomVerdict sc_per_location_2(const Execution& e, const DerivedRelations& d);

// Every instance, ordered by (pol source, pol target).
std::vector<PatternInstance> find_forbidden_patterns(const Execution& e);
std::vector<PatternInstance> find_forbidden_patterns(const Execution& e,
                                                     const DerivedRelations& d);

AxiomVerdict no_thin_air(const Execution& e, const Architecture& a);
AxiomVerdict no_thin_air(const DerivedRelations& d, const ArchitectureResult& r);

AxiomVerdict observation(const Execution& e, const Architecture& a);
AxiomVerdict observation(const DerivedRelations& d, const ArchitectureResult& r);

AxiomVerdict propagation(const Execution& e, const Architecture& a);
AxiomVerdict propagation(const Execution& e, const ArchitectureResult& r);

// One verdict per Axiom, in enum order.
std::vector<AxiomVerdict> check_all(const Execution& e, const Architecture& a);

// Re-checks a failing verdict's witness against the relation that defines
// the axiom. Returns true for holding verdicts without a witness.
bool witness_validates(const Execution& e, const Architecture& a,
                       const AxiomVerdict& v);

const AxiomVerdict& verdict_for(const std::vector<AxiomVerdict>& verdicts, Axiom a);

}  // namespace axcat
