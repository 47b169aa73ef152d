#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace axcat {

// Events are densely numbered within one execution; a 64-bit word holds a
// whole row of a relation, which bounds every execution to kMaxEvents.
inline constexpr std::size_t kMaxEvents = 64;

struct EventId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const EventId&) const = default;
};

// A set of event identifiers in [0, kMaxEvents).
class EventSet {
 public:
  constexpr EventSet() = default;
  constexpr explicit EventSet(std::uint64_t bits) : bits_(bits) {}

  // {0, ..., n-1}
  static EventSet dense(std::size_t n);
  static EventSet of(std::initializer_list<std::uint32_t> ids);

  bool contains(EventId e) const {
    return e.value < kMaxEvents && ((bits_ >> e.value) & 1u) != 0;
  }
  void insert(EventId e);
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  // One past the largest member, 0 when empty.
  std::size_t extent() const;
  std::vector<EventId> members() const;

  friend bool operator==(const EventSet&, const EventSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

// A finite binary relation over an explicit universe of events. Rows are
// bit masks: rows_[a] has bit b set iff (a, b) is in the relation.
class Relation {
 public:
  using Pair = std::pair<EventId, EventId>;

  Relation() = default;
  explicit Relation(EventSet universe);
  Relation(EventSet universe,
           std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> pairs);

  static Relation identity(EventSet universe);

  const EventSet& universe() const { return universe_; }

  bool contains(EventId a, EventId b) const {
    return a.value < rows_.size() && ((rows_[a.value] >> b.value) & 1u) != 0;
  }
  // Throws UsageError if either endpoint lies outside the universe.
  void insert(EventId a, EventId b);

  EventSet successors(EventId a) const {
    return a.value < rows_.size() ? EventSet(rows_[a.value]) : EventSet();
  }
  EventSet predecessors(EventId b) const;

  std::size_t size() const;
  bool empty() const;
  // Pairs in lexicographic order.
  std::vector<Pair> pairs() const;

  Relation filter(const std::function<bool(EventId, EventId)>& keep) const;
  bool subset_of(const Relation& other) const;

  friend bool operator==(const Relation& a, const Relation& b);

  // Raw row access for the algorithms in relation.cpp.
  std::uint64_t row(std::size_t a) const { return a < rows_.size() ? rows_[a] : 0; }
  void set_row(std::size_t a, std::uint64_t bits);

 private:
  EventSet universe_;
  std::vector<std::uint64_t> rows_;
};

// Set union; both operands must share a universe.
Relation union_of(const Relation& a, const Relation& b);
Relation intersection_of(const Relation& a, const Relation& b);
// Sequencing a;b: (x, y) iff some p has (x, p) in a and (p, y) in b.
Relation compose(const Relation& a, const Relation& b);
Relation inverse(const Relation& a);

// Smallest transitive superset. Adds (x, x) only when x lies on a cycle.
Relation transitive_closure(const Relation& a);
Relation reflexive_transitive_closure(const Relation& a);

bool is_acyclic(const Relation& a);
bool is_irreflexive(const Relation& a);

// A cycle n0 -> n1 -> ... -> nk -> n0, rotated so the smallest id is first.
struct CycleWitness {
  std::vector<EventId> nodes;

  bool validates(const Relation& r) const;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// Rotate so the minimal id comes first.
CycleWitness canonical_cycle(std::vector<EventId> nodes);

// A shortest cycle of `a` (ties broken by the smallest minimal node, then by
// breadth-first discovery order), or nullopt when `a` is acyclic.
std::optional<CycleWitness> find_cycle(const Relation& a);

std::string to_string(const Relation& r);
std::string to_string(const CycleWitness& c);

}  // namespace axcat
