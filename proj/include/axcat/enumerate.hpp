#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "axcat/axioms.hpp"
#include "axcat/candidates.hpp"
#include "axcat/litmus.hpp"
#include "axcat/parallel.hpp"

namespace axcat {

// Final state of one candidate: every register's value and, per address,
// the value of the co-maximal write.
struct Outcome {
  std::map<RegisterRef, Value> registers;
  std::map<std::string, Value> final_memory;

  auto operator<=>(const Outcome&) const = default;
};

std::string to_string(const Outcome& o);
bool satisfies(const Outcome& o, const Condition& c);

// A litmus test lowered to a skeleton, remembering which register each read
// writes to.
struct CompiledTest {
  Skeleton skeleton;
  std::vector<std::optional<RegisterRef>> registers;  // per program event
};

inline constexpr std::size_t kDefaultMaxEvents = 8;

// Addresses are ordered by name. Throws UsageError on an ill-formed test or
// one without instructions, CapExceeded past `max_events` program events.
CompiledTest compile(const LitmusTest& t, std::size_t max_events = kDefaultMaxEvents);

Outcome outcome_of(const CompiledTest& c, const Execution& e);

enum class AxiomSetKind : std::uint8_t { kSC, kScPerLocation, kFramework };

struct AxiomSet {
  AxiomSetKind kind = AxiomSetKind::kSC;
  // Used by kFramework; the other kinds still report framework verdicts
  // under it.
  Architecture arch = sc_architecture();

  static AxiomSet sc() { return {AxiomSetKind::kSC, sc_architecture()}; }
  static AxiomSet sc_per_location() {
    return {AxiomSetKind::kScPerLocation, sc_architecture()};
  }
  static AxiomSet framework(Architecture a) { return {AxiomSetKind::kFramework, std::move(a)}; }
};

// "sc", "scpl" or "framework".
std::string_view to_string(AxiomSetKind k);
std::optional<AxiomSetKind> parse_axiom_set_kind(std::string_view s);

// kSC: full SC. kScPerLocation: SC-Per-Location. kFramework:
// SC-Per-Location, No Thin Air, Observation and Propagation.
bool consistent(const std::vector<AxiomVerdict>& verdicts, AxiomSetKind kind);

struct EnumerationOptions {
  std::size_t max_events = kDefaultMaxEvents;
  Schedule schedule = Schedule::kParallel;
};

// Every well-formed candidate execution in canonical index order.
std::vector<Execution> enumerate_candidates(const LitmusTest& t,
                                            const EnumerationOptions& opts = {});

struct CandidateReport {
  std::size_t index = 0;
  Execution execution;
  Outcome outcome;
  std::vector<AxiomVerdict> verdicts;  // check_all under the set's architecture
  bool consistent = false;             // under the report's axiom set
};

struct EnumerationReport {
  std::string test_name;
  AxiomSet axiom_set;
  std::vector<CandidateReport> candidates;
  // Every outcome some candidate produces, and whether a consistent
  // candidate produces it.
  std::map<Outcome, bool> summary;

  std::set<Outcome> allowed() const;
  // Re-summarises the same candidates under another kind of axiom set.
  std::map<Outcome, bool> summary_under(AxiomSetKind kind) const;
};

EnumerationReport allowed_outcomes(const LitmusTest& t, const AxiomSet& axioms,
                                   const EnumerationOptions& opts = {});

}  // namespace axcat
