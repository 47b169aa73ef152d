#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "axcat/execution.hpp"
#include "axcat/relation.hpp"

namespace axcat {

// x pol y and y com⁺ x: a direct violation of the pairwise coherence check.
struct WitnessPair {
  EventId x;
  EventId y;

  bool validates(const DerivedRelations& d) const {
    return d.pol.contains(x, y) && d.com_plus.contains(y, x);
  }
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// How two same-address events relate under com⁺. Listed in the order the
// cases are tried.
enum class TotalityCase : std::uint8_t {
  kComPlusForward,     // x com⁺ y
  kEqualWrites,        // x, y writes and x = y
  kSameRfSourceReads,  // x, y reads with rf⁻¹(x) = rf⁻¹(y)
  kComPlusBackward,    // y com⁺ x
};

std::string_view to_string(TotalityCase c);

// First applicable case, or nullopt if none applies (which would falsify
// the totality of com⁺). Throws UsageError if the addresses differ.
std::optional<TotalityCase> totality_case(const Execution& e, EventId x, EventId y);
std::optional<TotalityCase> totality_case(const Execution& e, const DerivedRelations& d,
                                          EventId x, EventId y);

enum class CollapseRule : std::uint8_t {
  kTwoCycle,       // x -> p1 -> x: read the pair off directly
  kDropFirst,      // x -> p2 -> ... -> x is still a cycle
  kDropFirstTwo,   // x -> rest -> x is still a cycle
  kInnerTwoCycle,  // p1 -> p2 -> p1
  kOuterTwoCycle,  // x -> p1 -> x
};

std::string_view to_string(CollapseRule r);

struct CollapseStep {
  std::vector<EventId> cycle;  // cycle[0] is the anchor x
  CollapseRule rule;
  // How x and p2 relate, when the cycle has a p2.
  std::optional<TotalityCase> anchor_case;
};

struct CollapseTrace {
  WitnessPair pair;
  std::vector<CollapseStep> steps;
};

// Shrinks a cycle of pol ∪ com⁺ (any pol ∪ com cycle qualifies) to a
// witness pair. Every step strictly shortens the cycle. Throws UsageError if
// `cycle` is not a cycle of pol ∪ com⁺ in the well-formed execution `e`.
WitnessPair collapse_cycle(const Execution& e, const CycleWitness& cycle);
CollapseTrace collapse_cycle_traced(const Execution& e, const DerivedRelations& d,
                                    const CycleWitness& cycle);

}  // namespace axcat
