#include "axcat/relation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "axcat/errors.hpp"

namespace axcat {

namespace {

void require_same_universe(const Relation& a, const Relation& b,
                           const char* op) {
  if (a.universe() != b.universe()) {
    throw UsageError(std::string(op) + ": relations have different universes");
  }
}

template <class Fn>
void for_each_bit(std::uint64_t bits, Fn&& fn) {
  while (bits != 0) {
    const auto i = static_cast<std::uint32_t>(std::countr_zero(bits));
    fn(i);
    bits &= bits - 1;
  }
}

}  // namespace

EventSet EventSet::dense(std::size_t n) {
  if (n > kMaxEvents) {
    throw UsageError("event set larger than " + std::to_string(kMaxEvents));
  }
  return EventSet(n == kMaxEvents ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << n) - 1);
}

EventSet EventSet::of(std::initializer_list<std::uint32_t> ids) {
  EventSet s;
  for (auto id : ids) s.insert(EventId{id});
  return s;
}

void EventSet::insert(EventId e) {
  if (e.value >= kMaxEvents) {
    throw UsageError("event id " + std::to_string(e.value) + " out of range");
  }
  bits_ |= std::uint64_t{1} << e.value;
}

std::size_t EventSet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::size_t EventSet::extent() const {
  return bits_ == 0 ? 0 : kMaxEvents - static_cast<std::size_t>(std::countl_zero(bits_));
}

std::vector<EventId> EventSet::members() const {
  std::vector<EventId> out;
  out.reserve(size());
  for_each_bit(bits_, [&](std::uint32_t i) { out.push_back(EventId{i}); });
  return out;
}

Relation::Relation(EventSet universe)
    : universe_(universe), rows_(universe.extent(), 0) {}

Relation::Relation(
    EventSet universe,
    std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> pairs)
    : Relation(universe) {
  for (auto [a, b] : pairs) insert(EventId{a}, EventId{b});
}

Relation Relation::identity(EventSet universe) {
  Relation r(universe);
  for (auto e : universe.members()) r.insert(e, e);
  return r;
}

void Relation::insert(EventId a, EventId b) {
  if (!universe_.contains(a) || !universe_.contains(b)) {
    throw UsageError("pair (" + std::to_string(a.value) + ", " +
                     std::to_string(b.value) + ") outside relation universe");
  }
  rows_[a.value] |= std::uint64_t{1} << b.value;
}

void Relation::set_row(std::size_t a, std::uint64_t bits) {
  if (bits == 0 && a >= rows_.size()) return;
  if (!universe_.contains(EventId{static_cast<std::uint32_t>(a)}) ||
      (bits & ~universe_.bits()) != 0) {
    throw UsageError("row outside relation universe");
  }
  rows_[a] = bits;
}

EventSet Relation::predecessors(EventId b) const {
  std::uint64_t out = 0;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if ((rows_[a] >> b.value) & 1u) out |= std::uint64_t{1} << a;
  }
  return EventSet(out);
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (auto row : rows_) n += static_cast<std::size_t>(std::popcount(row));
  return n;
}

bool Relation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](std::uint64_t row) { return row == 0; });
}

std::vector<Relation::Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for_each_bit(rows_[a], [&](std::uint32_t b) {
      out.emplace_back(EventId{static_cast<std::uint32_t>(a)}, EventId{b});
    });
  }
  return out;
}

Relation Relation::filter(
    const std::function<bool(EventId, EventId)>& keep) const {
  Relation out(universe_);
  for (const auto& [a, b] : pairs()) {
    if (keep(a, b)) out.rows_[a.value] |= std::uint64_t{1} << b.value;
  }
  return out;
}

bool Relation::subset_of(const Relation& other) const {
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if ((rows_[a] & ~other.row(a)) != 0) return false;
  }
  return true;
}

bool operator==(const Relation& a, const Relation& b) {
  return a.universe_ == b.universe_ && a.rows_ == b.rows_;
}

Relation union_of(const Relation& a, const Relation& b) {
  require_same_universe(a, b, "union");
  Relation out = a;
  for (std::size_t i = 0; i < a.universe().extent(); ++i) {
    out.set_row(i, a.row(i) | b.row(i));
  }
  return out;
}

Relation intersection_of(const Relation& a, const Relation& b) {
  require_same_universe(a, b, "intersection");
  Relation out = a;
  for (std::size_t i = 0; i < a.universe().extent(); ++i) {
    out.set_row(i, a.row(i) & b.row(i));
  }
  return out;
}

Relation compose(const Relation& a, const Relation& b) {
  require_same_universe(a, b, "compose");
  Relation out(a.universe());
  for (std::size_t x = 0; x < a.universe().extent(); ++x) {
    std::uint64_t acc = 0;
    for_each_bit(a.row(x), [&](std::uint32_t p) { acc |= b.row(p); });
    out.set_row(x, acc);
  }
  return out;
}

Relation inverse(const Relation& a) {
  Relation out(a.universe());
  for (const auto& [x, y] : a.pairs()) out.insert(y, x);
  return out;
}

Relation transitive_closure(const Relation& a) {
  // Warshall over bit rows: after step k, row i reaches everything reachable
  // through intermediates drawn from {0..k}.
  const std::size_t n = a.universe().extent();
  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = a.row(i);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i] & bit) rows[i] |= rows[k];
    }
  }
  Relation out(a.universe());
  for (std::size_t i = 0; i < n; ++i) out.set_row(i, rows[i]);
  return out;
}

Relation reflexive_transitive_closure(const Relation& a) {
  return union_of(transitive_closure(a), Relation::identity(a.universe()));
}

bool is_irreflexive(const Relation& a) {
  for (std::size_t i = 0; i < a.universe().extent(); ++i) {
    if ((a.row(i) >> i) & 1u) return false;
  }
  return true;
}

bool is_acyclic(const Relation& a) {
  // Peel sources until nothing changes; a remainder means a cycle.
  std::uint64_t alive = a.universe().bits();
  bool changed = true;
  while (changed && alive != 0) {
    changed = false;
    std::uint64_t has_pred = 0;
    for_each_bit(alive, [&](std::uint32_t i) { has_pred |= a.row(i); });
    const std::uint64_t sources = alive & ~has_pred;
    if (sources != 0) {
      alive &= ~sources;
      changed = true;
    }
  }
  return alive == 0;
}

bool CycleWitness::validates(const Relation& r) const {
  if (nodes.empty()) return false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!r.contains(nodes[i], nodes[(i + 1) % nodes.size()])) return false;
  }
  return true;
}

CycleWitness canonical_cycle(std::vector<EventId> nodes) {
  if (!nodes.empty()) {
    auto min_it = std::min_element(nodes.begin(), nodes.end());
    std::rotate(nodes.begin(), min_it, nodes.end());
  }
  return CycleWitness{std::move(nodes)};
}

std::optional<CycleWitness> find_cycle(const Relation& a) {
  const std::size_t n = a.universe().extent();
  std::optional<CycleWitness> best;
  std::vector<int> parent(n);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);

  for (auto start : a.universe().members()) {
    const std::uint32_t s = start.value;
    if (best && best->nodes.size() == 1) break;
    // Only nodes above s may appear, so s is the cycle's minimum.
    const std::uint64_t at_or_below =
        s + 1 == kMaxEvents ? ~std::uint64_t{0} : (std::uint64_t{2} << s) - 1;
    const std::uint64_t allowed = a.universe().bits() & ~at_or_below;
    std::fill(parent.begin(), parent.end(), -1);
    std::uint64_t seen = std::uint64_t{1} << s;
    queue.clear();
    queue.push_back(s);
    std::optional<std::uint32_t> closing;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      if ((a.row(u) >> s) & 1u) {
        closing = u;
        break;
      }
      for_each_bit(a.row(u) & allowed & ~seen, [&](std::uint32_t v) {
        seen |= std::uint64_t{1} << v;
        parent[v] = static_cast<int>(u);
        queue.push_back(v);
      });
    }
    if (!closing) continue;
    std::vector<EventId> path;
    for (int v = static_cast<int>(*closing); v != -1; v = parent[static_cast<std::size_t>(v)]) {
      path.push_back(EventId{static_cast<std::uint32_t>(v)});
    }
    std::reverse(path.begin(), path.end());
    if (!best || path.size() < best->nodes.size()) {
      best = CycleWitness{std::move(path)};
    }
  }
  return best;
}

std::string to_string(const Relation& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) os << ", ";
    first = false;
    os << '(' << a.value << ',' << b.value << ')';
  }
  os << '}';
  return os.str();
}

std::string to_string(const CycleWitness& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    if (i) os << ' ';
    os << c.nodes[i].value;
  }
  os << ']';
  return os.str();
}

}  // namespace axcat
