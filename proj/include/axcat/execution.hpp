#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "axcat/relation.hpp"

namespace axcat {

using ProcId = std::int32_t;
using Value = std::int64_t;

// Process of the synthetic initial writes. Init events are never po-related.
inline constexpr ProcId kInitProc = -1;

enum class AccessKind : std::uint8_t { kRead, kWrite };

// Index into Execution::addresses.
struct Address {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const Address&) const = default;
};

struct Event {
  EventId id;
  ProcId proc = 0;
  AccessKind kind = AccessKind::kWrite;
  Address addr;
  Value value = 0;

  bool is_read() const { return kind == AccessKind::kRead; }
  bool is_write() const { return kind == AccessKind::kWrite; }
  bool is_init() const { return proc == kInitProc; }

  friend bool operator==(const Event&, const Event&) = default;
};

// The execution tuple: events plus program order, coherence order and
// reads-from. po and co are stored transitively closed. Executions may be
// ill-formed; call validate() before deriving anything from one.
struct Execution {
  std::vector<Event> events;  // events[i].id == i
  std::vector<std::string> addresses;
  Relation po;
  Relation co;
  Relation rf;

  EventSet universe() const { return EventSet::dense(events.size()); }
  const Event& event(EventId id) const { return events.at(id.value); }
  std::string_view address_name(Address a) const { return addresses.at(a.index); }

  friend bool operator==(const Execution&, const Execution&) = default;
};

enum class ViolationKind : std::uint8_t {
  kEventIdMismatch,
  kRelationUniverse,
  kPoReflexive,
  kPoNotTransitive,
  kPoCrossProcess,
  kPoInvolvesInit,
  kPoNotTotal,
  kCoNotWrites,
  kCoCrossAddress,
  kCoReflexive,
  kCoNotTransitive,
  kCoNotTotal,
  kRfNotWriteToRead,
  kRfAddressMismatch,
  kReadWithoutRfSource,
  kDuplicateRfSource,
  kRfValueMismatch,
};

struct WellFormednessViolation {
  ViolationKind kind;
  std::vector<EventId> events;

  friend bool operator==(const WellFormednessViolation&,
                         const WellFormednessViolation&) = default;
};

// Machine-readable tag, e.g. "duplicate-rf-source".
std::string_view to_string(ViolationKind kind);

// Empty iff the execution is well formed. One entry per broken clause
// instance, in a deterministic order.
std::vector<WellFormednessViolation> validate(const Execution& e);

// The unique write `r` reads from. Throws UsageError if `r` is not a read
// or does not have exactly one rf source.
EventId rf_inv(const Execution& e, EventId r);

struct DerivedRelations {
  Relation fr;
  Relation com;
  Relation pol;
  Relation rfe;
  Relation fre;
  Relation com_plus;
};

// Throws UsageError on an ill-formed execution.
DerivedRelations derive(const Execution& e);
// As derive(), for callers that have already validated `e`.
DerivedRelations derive_unchecked(const Execution& e);

// com ∪ (co;rf) ∪ (fr;rf), which coincides with transitive_closure(com).
Relation com_plus_rewrite(const Execution& e);

// Incremental construction for tests and generators. Program order follows
// the order in which events of one process are added.
class ExecutionBuilder {
 public:
  EventId init(std::string_view addr, Value value = 0);
  EventId write(ProcId proc, std::string_view addr, Value value);
  EventId read(ProcId proc, std::string_view addr, Value value);

  ExecutionBuilder& co(EventId before, EventId after);
  // Totally orders the given writes, transitively.
  ExecutionBuilder& co_chain(std::initializer_list<EventId> writes);
  ExecutionBuilder& co_chain(const std::vector<EventId>& writes);
  ExecutionBuilder& rf(EventId write, EventId read);

  Address intern(std::string_view addr);
  Execution build() const;

 private:
  EventId add(ProcId proc, AccessKind kind, std::string_view addr, Value value);

  std::vector<Event> events_;
  std::vector<std::string> addresses_;
  std::vector<std::pair<EventId, EventId>> co_;
  std::vector<std::pair<EventId, EventId>> rf_;
};

std::string describe(const Execution& e, EventId id);

}  // namespace axcat
