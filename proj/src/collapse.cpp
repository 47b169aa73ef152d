#include "axcat/collapse.hpp"

#include <stdexcept>

#include "axcat/errors.hpp"

namespace axcat {

std::string_view to_string(TotalityCase c) {
  switch (c) {
    case TotalityCase::kComPlusForward: return "com+-forward";
    case TotalityCase::kEqualWrites: return "equal-writes";
    case TotalityCase::kSameRfSourceReads: return "same-rf-source-reads";
    case TotalityCase::kComPlusBackward: return "com+-backward";
  }
  return "unknown";
}

std::string_view to_string(CollapseRule r) {
  switch (r) {
    case CollapseRule::kTwoCycle: return "two-cycle";
    case CollapseRule::kDropFirst: return "drop-first";
    case CollapseRule::kDropFirstTwo: return "drop-first-two";
    case CollapseRule::kInnerTwoCycle: return "inner-two-cycle";
    case CollapseRule::kOuterTwoCycle: return "outer-two-cycle";
  }
  return "unknown";
}

std::optional<TotalityCase> totality_case(const Execution& e, EventId x, EventId y) {
  return totality_case(e, derive(e), x, y);
}

std::optional<TotalityCase> totality_case(const Execution& e, const DerivedRelations& d,
                                          EventId x, EventId y) {
  if (x.value >= e.events.size() || y.value >= e.events.size()) {
    throw UsageError("totality_case: unknown event");
  }
  const Event& ex = e.event(x);
  const Event& ey = e.event(y);
  if (ex.addr != ey.addr) throw UsageError("totality_case: addresses differ");
  if (d.com_plus.contains(x, y)) return TotalityCase::kComPlusForward;
  if (ex.is_write() && ey.is_write() && x == y) return TotalityCase::kEqualWrites;
  if (ex.is_read() && ey.is_read() && rf_inv(e, x) == rf_inv(e, y)) {
    return TotalityCase::kSameRfSourceReads;
  }
  if (d.com_plus.contains(y, x)) return TotalityCase::kComPlusBackward;
  return std::nullopt;
}

namespace {

class PolComPlus {
 public:
  explicit PolComPlus(const DerivedRelations& d) : d_(d) {}

  bool edge(EventId a, EventId b) const {
    return d_.pol.contains(a, b) || d_.com_plus.contains(a, b);
  }

  // anchor -> path[0] -> ... -> path.back() -> anchor
  bool is_cycle(EventId anchor, const std::vector<EventId>& path) const {
    EventId at = anchor;
    for (EventId next : path) {
      if (!edge(at, next)) return false;
      at = next;
    }
    return edge(at, anchor);
  }

 private:
  const DerivedRelations& d_;
};

}  // namespace

CollapseTrace collapse_cycle_traced(const Execution& e, const DerivedRelations& d,
                                    const CycleWitness& cycle) {
  const PolComPlus rel(d);
  if (cycle.nodes.empty() ||
      !rel.is_cycle(cycle.nodes.front(),
                    std::vector<EventId>(cycle.nodes.begin() + 1, cycle.nodes.end()))) {
    throw UsageError("collapse_cycle: not a cycle of pol ∪ com+");
  }

  CollapseTrace trace;
  EventId x = cycle.nodes.front();
  std::vector<EventId> path(cycle.nodes.begin() + 1, cycle.nodes.end());
  const std::size_t max_steps = cycle.nodes.size();

  while (true) {
    if (trace.steps.size() > max_steps) {
      throw std::logic_error("collapse_cycle: cycle failed to shrink");
    }
    CollapseStep step;
    step.cycle.push_back(x);
    step.cycle.insert(step.cycle.end(), path.begin(), path.end());

    if (path.empty()) {
      // Both relations are irreflexive, so a 1-cycle cannot validate.
      throw std::logic_error("collapse_cycle: reached a self loop");
    }
    const EventId p1 = path[0];
    if (path.size() == 1) {
      step.rule = CollapseRule::kTwoCycle;
      trace.steps.push_back(std::move(step));
      trace.pair = d.pol.contains(x, p1) ? WitnessPair{x, p1} : WitnessPair{p1, x};
      return trace;
    }

    const EventId p2 = path[1];
    const std::vector<EventId> rest(path.begin() + 2, path.end());
    std::vector<EventId> without_p1(path.begin() + 1, path.end());
    step.anchor_case = totality_case(e, d, x, p2);

    if (rel.is_cycle(x, without_p1)) {
      step.rule = CollapseRule::kDropFirst;
      path = std::move(without_p1);
    } else if (rel.is_cycle(x, rest)) {
      step.rule = CollapseRule::kDropFirstTwo;
      path = rest;
    } else if (rel.is_cycle(p1, {p2})) {
      step.rule = CollapseRule::kInnerTwoCycle;
      x = p1;
      path = {p2};
    } else {
      step.rule = CollapseRule::kOuterTwoCycle;
      path = {p1};
    }
    trace.steps.push_back(std::move(step));
  }
}

WitnessPair collapse_cycle(const Execution& e, const CycleWitness& cycle) {
  return collapse_cycle_traced(e, derive(e), cycle).pair;
}

}  // namespace axcat
