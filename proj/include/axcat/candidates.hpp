#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "axcat/execution.hpp"

namespace axcat {

// The fixed part of a candidate execution: which events exist, in which
// process, on which address. Coherence order and reads-from are the choice
// points; read values follow from the chosen rf source.
struct SkeletonEvent {
  ProcId proc = 0;
  AccessKind kind = AccessKind::kWrite;
  Address addr;
  Value value = 0;  // ignored for reads
};

struct Skeleton {
  std::vector<std::string> addresses;
  std::vector<Value> initial;          // one init write per address
  std::vector<SkeletonEvent> events;   // program events; po follows list order

  std::size_t event_count() const { return addresses.size() + events.size(); }
};

// Event ids: init writes first (one per address, in address order), then
// program events in skeleton order.
inline EventId init_event(Address a) { return EventId{a.index}; }
inline EventId program_event(const Skeleton& s, std::size_t i) {
  return EventId{static_cast<std::uint32_t>(s.addresses.size() + i)};
}

// Π over addresses of (program writes)! × Π over reads of (1 + same-address
// program writes). Throws CapExceeded if the product overflows.
std::uint64_t candidate_count(const Skeleton& s);

// The index-th candidate, index in [0, candidate_count(s)). The init write
// is always co-first at its address. Index digits, most significant first:
// one coherence permutation per address, then one rf choice per read (choice
// 0 is the init write, then program writes in skeleton order).
Execution candidate_at(const Skeleton& s, std::uint64_t index);

void for_each_candidate(const Skeleton& s, const std::function<void(Execution&&)>& fn);

// Throws UsageError when an event names an unknown address or the skeleton
// exceeds kMaxEvents.
void check_skeleton(const Skeleton& s);

}  // namespace axcat
