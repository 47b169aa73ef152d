#include "axcat/candidates.hpp"

#include <limits>
#include <map>

#include "axcat/errors.hpp"

namespace axcat {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw CapExceeded("candidate count overflows 64 bits");
  }
  return a * b;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

struct ChoicePoints {
  std::vector<std::vector<std::size_t>> writes_by_addr;  // program event indices
  std::vector<std::size_t> reads;                        // program event indices
};

ChoicePoints choice_points(const Skeleton& s) {
  ChoicePoints cp;
  cp.writes_by_addr.resize(s.addresses.size());
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const auto& ev = s.events[i];
    if (ev.kind == AccessKind::kWrite) {
      cp.writes_by_addr[ev.addr.index].push_back(i);
    } else {
      cp.reads.push_back(i);
    }
  }
  return cp;
}

// Permutation number `code` of `items` in the factorial number system.
std::vector<std::size_t> nth_permutation(std::vector<std::size_t> items,
                                         std::uint64_t code) {
  std::vector<std::size_t> out;
  out.reserve(items.size());
  while (!items.empty()) {
    const std::uint64_t block = factorial(items.size() - 1);
    const auto pick = static_cast<std::size_t>(code / block);
    code %= block;
    out.push_back(items[pick]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace

void check_skeleton(const Skeleton& s) {
  if (s.initial.size() != s.addresses.size()) {
    throw UsageError("skeleton: one initial value per address required");
  }
  if (s.event_count() > kMaxEvents) {
    throw CapExceeded("skeleton exceeds " + std::to_string(kMaxEvents) + " events");
  }
  for (const auto& ev : s.events) {
    if (ev.addr.index >= s.addresses.size()) throw UsageError("skeleton: unknown address");
    if (ev.proc < 0) throw UsageError("skeleton: negative process id");
  }
}

std::uint64_t candidate_count(const Skeleton& s) {
  check_skeleton(s);
  const ChoicePoints cp = choice_points(s);
  std::uint64_t n = 1;
  for (const auto& writes : cp.writes_by_addr) n = checked_mul(n, factorial(writes.size()));
  for (std::size_t r : cp.reads) {
    n = checked_mul(n, 1 + cp.writes_by_addr[s.events[r].addr.index].size());
  }
  return n;
}

Execution candidate_at(const Skeleton& s, std::uint64_t index) {
  const std::uint64_t total = candidate_count(s);
  if (index >= total) throw UsageError("candidate index out of range");
  const ChoicePoints cp = choice_points(s);

  // Peel digits from the least significant end: reads last-to-first, then
  // addresses last-to-first.
  std::vector<std::size_t> rf_choice(cp.reads.size());
  for (std::size_t k = cp.reads.size(); k-- > 0;) {
    const std::uint64_t radix =
        1 + cp.writes_by_addr[s.events[cp.reads[k]].addr.index].size();
    rf_choice[k] = static_cast<std::size_t>(index % radix);
    index /= radix;
  }
  std::vector<std::vector<std::size_t>> co_order(s.addresses.size());
  for (std::size_t a = s.addresses.size(); a-- > 0;) {
    const std::uint64_t radix = factorial(cp.writes_by_addr[a].size());
    co_order[a] = nth_permutation(cp.writes_by_addr[a], index % radix);
    index /= radix;
  }

  Execution e;
  e.addresses = s.addresses;
  for (std::size_t a = 0; a < s.addresses.size(); ++a) {
    const Address addr{static_cast<std::uint32_t>(a)};
    e.events.push_back(Event{init_event(addr), kInitProc, AccessKind::kWrite, addr,
                             s.initial[a]});
  }
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const auto& se = s.events[i];
    e.events.push_back(Event{program_event(s, i), se.proc, se.kind, se.addr,
                             se.kind == AccessKind::kWrite ? se.value : 0});
  }
  const EventSet universe = e.universe();
  e.po = Relation(universe);
  e.co = Relation(universe);
  e.rf = Relation(universe);

  std::map<ProcId, std::vector<std::size_t>> per_proc;
  for (std::size_t i = 0; i < s.events.size(); ++i) per_proc[s.events[i].proc].push_back(i);
  for (const auto& [proc, idx] : per_proc) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        e.po.insert(program_event(s, idx[i]), program_event(s, idx[j]));
      }
    }
  }

  for (std::size_t a = 0; a < s.addresses.size(); ++a) {
    std::vector<EventId> chain{init_event(Address{static_cast<std::uint32_t>(a)})};
    for (std::size_t w : co_order[a]) chain.push_back(program_event(s, w));
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (std::size_t j = i + 1; j < chain.size(); ++j) e.co.insert(chain[i], chain[j]);
    }
  }

  for (std::size_t k = 0; k < cp.reads.size(); ++k) {
    const std::size_t r = cp.reads[k];
    const Address addr = s.events[r].addr;
    const EventId source =
        rf_choice[k] == 0 ? init_event(addr)
                          : program_event(s, cp.writes_by_addr[addr.index][rf_choice[k] - 1]);
    e.rf.insert(source, program_event(s, r));
    e.events[program_event(s, r).value].value = e.event(source).value;
  }
  return e;
}

void for_each_candidate(const Skeleton& s, const std::function<void(Execution&&)>& fn) {
  const std::uint64_t total = candidate_count(s);
  for (std::uint64_t i = 0; i < total; ++i) fn(candidate_at(s, i));
}

}  // namespace axcat
