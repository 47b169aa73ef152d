#include "axcat/execution.hpp"

#include <algorithm>
#include <map>

#include "axcat/errors.hpp"

namespace axcat {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEventIdMismatch: return "event-id-mismatch";
    case ViolationKind::kRelationUniverse: return "relation-universe";
    case ViolationKind::kPoReflexive: return "po-reflexive";
    case ViolationKind::kPoNotTransitive: return "po-not-transitive";
    case ViolationKind::kPoCrossProcess: return "po-cross-process";
    case ViolationKind::kPoInvolvesInit: return "po-involves-init";
    case ViolationKind::kPoNotTotal: return "po-not-total";
    case ViolationKind::kCoNotWrites: return "co-not-writes";
    case ViolationKind::kCoCrossAddress: return "co-cross-address";
    case ViolationKind::kCoReflexive: return "co-reflexive";
    case ViolationKind::kCoNotTransitive: return "co-not-transitive";
    case ViolationKind::kCoNotTotal: return "co-not-total";
    case ViolationKind::kRfNotWriteToRead: return "rf-not-write-to-read";
    case ViolationKind::kRfAddressMismatch: return "rf-address-mismatch";
    case ViolationKind::kReadWithoutRfSource: return "read-without-rf-source";
    case ViolationKind::kDuplicateRfSource: return "duplicate-rf-source";
    case ViolationKind::kRfValueMismatch: return "rf-value-mismatch";
  }
  return "unknown";
}

namespace {

void check_transitive(const Relation& r, ViolationKind kind,
                      std::vector<WellFormednessViolation>& out) {
  for (const auto& [a, b] : compose(r, r).pairs()) {
    if (!r.contains(a, b)) out.push_back({kind, {a, b}});
  }
}

}  // namespace

std::vector<WellFormednessViolation> validate(const Execution& e) {
  std::vector<WellFormednessViolation> out;
  if (e.events.size() > kMaxEvents) {
    out.push_back({ViolationKind::kEventIdMismatch, {}});
    return out;
  }
  for (std::size_t i = 0; i < e.events.size(); ++i) {
    if (e.events[i].id.value != i || e.events[i].addr.index >= e.addresses.size()) {
      out.push_back({ViolationKind::kEventIdMismatch,
                     {EventId{static_cast<std::uint32_t>(i)}}});
    }
  }
  if (!out.empty()) return out;

  const EventSet universe = e.universe();
  if (e.po.universe() != universe || e.co.universe() != universe ||
      e.rf.universe() != universe) {
    out.push_back({ViolationKind::kRelationUniverse, {}});
    return out;
  }

  // po: a per-process strict total order that leaves init events alone.
  for (const auto& [a, b] : e.po.pairs()) {
    const Event& x = e.event(a);
    const Event& y = e.event(b);
    if (a == b) out.push_back({ViolationKind::kPoReflexive, {a}});
    if (x.is_init() || y.is_init()) {
      out.push_back({ViolationKind::kPoInvolvesInit, {a, b}});
    } else if (x.proc != y.proc) {
      out.push_back({ViolationKind::kPoCrossProcess, {a, b}});
    }
  }
  check_transitive(e.po, ViolationKind::kPoNotTransitive, out);
  for (const Event& x : e.events) {
    for (const Event& y : e.events) {
      if (x.id < y.id && !x.is_init() && x.proc == y.proc &&
          !e.po.contains(x.id, y.id) && !e.po.contains(y.id, x.id)) {
        out.push_back({ViolationKind::kPoNotTotal, {x.id, y.id}});
      }
    }
  }

  // co: per-address strict total order over writes.
  for (const auto& [a, b] : e.co.pairs()) {
    const Event& x = e.event(a);
    const Event& y = e.event(b);
    if (!x.is_write() || !y.is_write()) {
      out.push_back({ViolationKind::kCoNotWrites, {a, b}});
    } else if (x.addr != y.addr) {
      out.push_back({ViolationKind::kCoCrossAddress, {a, b}});
    }
    if (a == b) out.push_back({ViolationKind::kCoReflexive, {a}});
  }
  check_transitive(e.co, ViolationKind::kCoNotTransitive, out);
  for (const Event& x : e.events) {
    for (const Event& y : e.events) {
      if (x.id < y.id && x.is_write() && y.is_write() && x.addr == y.addr &&
          !e.co.contains(x.id, y.id) && !e.co.contains(y.id, x.id)) {
        out.push_back({ViolationKind::kCoNotTotal, {x.id, y.id}});
      }
    }
  }

  // rf: write -> read, same address and value, exactly one source per read.
  for (const auto& [a, b] : e.rf.pairs()) {
    const Event& w = e.event(a);
    const Event& r = e.event(b);
    if (!w.is_write() || !r.is_read()) {
      out.push_back({ViolationKind::kRfNotWriteToRead, {a, b}});
      continue;
    }
    if (w.addr != r.addr) out.push_back({ViolationKind::kRfAddressMismatch, {a, b}});
    if (w.value != r.value) out.push_back({ViolationKind::kRfValueMismatch, {a, b}});
  }
  for (const Event& r : e.events) {
    if (!r.is_read()) continue;
    const auto sources = e.rf.predecessors(r.id);
    if (sources.empty()) {
      out.push_back({ViolationKind::kReadWithoutRfSource, {r.id}});
    } else if (sources.size() > 1) {
      auto ids = sources.members();
      ids.push_back(r.id);
      out.push_back({ViolationKind::kDuplicateRfSource, std::move(ids)});
    }
  }
  return out;
}

EventId rf_inv(const Execution& e, EventId r) {
  if (r.value >= e.events.size() || !e.event(r).is_read()) {
    throw UsageError("rf_inv: event " + std::to_string(r.value) + " is not a read");
  }
  const auto sources = e.rf.predecessors(r);
  if (sources.size() != 1) {
    throw UsageError("rf_inv: read " + std::to_string(r.value) +
                     " does not have exactly one rf source");
  }
  return sources.members().front();
}

DerivedRelations derive_unchecked(const Execution& e) {
  DerivedRelations d;
  d.fr = compose(inverse(e.rf), e.co);
  d.com = union_of(union_of(e.co, e.rf), d.fr);
  d.pol = e.po.filter([&](EventId a, EventId b) {
    return e.event(a).addr == e.event(b).addr;
  });
  const auto external = [&](EventId a, EventId b) {
    return e.event(a).proc != e.event(b).proc;
  };
  d.rfe = e.rf.filter(external);
  d.fre = d.fr.filter(external);
  d.com_plus = transitive_closure(d.com);
  return d;
}

DerivedRelations derive(const Execution& e) {
  if (auto v = validate(e); !v.empty()) {
    throw UsageError("derive: ill-formed execution (" +
                     std::string(to_string(v.front().kind)) + ")");
  }
  return derive_unchecked(e);
}

Relation com_plus_rewrite(const Execution& e) {
  if (auto v = validate(e); !v.empty()) {
    throw UsageError("com_plus_rewrite: ill-formed execution (" +
                     std::string(to_string(v.front().kind)) + ")");
  }
  const Relation fr = compose(inverse(e.rf), e.co);
  const Relation com = union_of(union_of(e.co, e.rf), fr);
  return union_of(union_of(com, compose(e.co, e.rf)), compose(fr, e.rf));
}

Address ExecutionBuilder::intern(std::string_view addr) {
  auto it = std::find(addresses_.begin(), addresses_.end(), addr);
  if (it == addresses_.end()) {
    addresses_.emplace_back(addr);
    return Address{static_cast<std::uint32_t>(addresses_.size() - 1)};
  }
  return Address{static_cast<std::uint32_t>(it - addresses_.begin())};
}

EventId ExecutionBuilder::add(ProcId proc, AccessKind kind,
                              std::string_view addr, Value value) {
  if (events_.size() >= kMaxEvents) {
    throw CapExceeded("execution exceeds " + std::to_string(kMaxEvents) + " events");
  }
  const EventId id{static_cast<std::uint32_t>(events_.size())};
  events_.push_back(Event{id, proc, kind, intern(addr), value});
  return id;
}

EventId ExecutionBuilder::init(std::string_view addr, Value value) {
  return add(kInitProc, AccessKind::kWrite, addr, value);
}

EventId ExecutionBuilder::write(ProcId proc, std::string_view addr, Value value) {
  if (proc < 0) throw UsageError("process ids are non-negative");
  return add(proc, AccessKind::kWrite, addr, value);
}

EventId ExecutionBuilder::read(ProcId proc, std::string_view addr, Value value) {
  if (proc < 0) throw UsageError("process ids are non-negative");
  return add(proc, AccessKind::kRead, addr, value);
}

ExecutionBuilder& ExecutionBuilder::co(EventId before, EventId after) {
  co_.emplace_back(before, after);
  return *this;
}

ExecutionBuilder& ExecutionBuilder::co_chain(std::initializer_list<EventId> writes) {
  return co_chain(std::vector<EventId>(writes));
}

ExecutionBuilder& ExecutionBuilder::co_chain(const std::vector<EventId>& writes) {
  for (std::size_t i = 0; i < writes.size(); ++i) {
    for (std::size_t j = i + 1; j < writes.size(); ++j) co(writes[i], writes[j]);
  }
  return *this;
}

ExecutionBuilder& ExecutionBuilder::rf(EventId write, EventId read) {
  rf_.emplace_back(write, read);
  return *this;
}

Execution ExecutionBuilder::build() const {
  Execution e;
  e.events = events_;
  e.addresses = addresses_;
  const EventSet universe = e.universe();
  e.po = Relation(universe);
  e.co = Relation(universe);
  e.rf = Relation(universe);

  std::map<ProcId, std::vector<EventId>> per_proc;
  for (const Event& ev : events_) {
    if (!ev.is_init()) per_proc[ev.proc].push_back(ev.id);
  }
  for (const auto& [proc, ids] : per_proc) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) e.po.insert(ids[i], ids[j]);
    }
  }
  for (auto [a, b] : co_) e.co.insert(a, b);
  for (auto [a, b] : rf_) e.rf.insert(a, b);
  return e;
}

std::string describe(const Execution& e, EventId id) {
  const Event& ev = e.event(id);
  std::string out = "e" + std::to_string(id.value) + " ";
  out += ev.is_init() ? "init" : "P" + std::to_string(ev.proc);
  out += ev.is_write() ? ":W " : ":R ";
  out += e.address_name(ev.addr);
  out += "=" + std::to_string(ev.value);
  return out;
}

}  // namespace axcat
