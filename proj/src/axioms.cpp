#include "axcat/axioms.hpp"

#include <stdexcept>

#include "axcat/errors.hpp"

namespace axcat {

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::kScPerLocation1: return "sc-per-location";
    case Axiom::kScPerLocation2: return "sc-per-location-2";
    case Axiom::kFivePatterns: return "five-patterns";
    case Axiom::kFullSC: return "sc";
    case Axiom::kNoThinAir: return "no-thin-air";
    case Axiom::kObservation: return "observation";
    case Axiom::kPropagation: return "propagation";
  }
  return "unknown";
}

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::kCoWW: return "CoWW";
    case Pattern::kCoRWrf: return "CoRW-rf";
    case Pattern::kCoWRfr: return "CoWR-fr";
    case Pattern::kCoRWcorf: return "CoRW-corf";
    case Pattern::kCoRRfrrf: return "CoRR-frrf";
  }
  return "unknown";
}

namespace {

AxiomVerdict acyclicity_verdict(Axiom axiom, const Relation& r) {
  if (auto cycle = find_cycle(r)) return {axiom, false, Witness{*cycle}};
  return {axiom, true, std::nullopt};
}

DerivedRelations checked_derive(const Execution& e) { return derive(e); }

Relation observation_relation(const DerivedRelations& d, const ArchitectureResult& r) {
  const Relation hb_star = reflexive_transitive_closure(happens_before(d, r));
  return compose(d.fre, compose(r.prop, hb_star));
}

// (y, x) closes a pattern opened by x pol y; returns the shape if any.
std::optional<PatternInstance> classify_back_edge(const Execution& e,
                                                 const DerivedRelations& d,
                                                 EventId x, EventId y) {
  if (e.co.contains(y, x)) return PatternInstance{Pattern::kCoWW, {x, y}};
  if (e.rf.contains(y, x)) return PatternInstance{Pattern::kCoRWrf, {x, y}};
  if (d.fr.contains(y, x)) return PatternInstance{Pattern::kCoWRfr, {x, y}};
  if (!e.event(x).is_read()) return std::nullopt;
  const EventId source = rf_inv(e, x);
  if (e.co.contains(y, source)) {
    return PatternInstance{Pattern::kCoRWcorf, {x, y, source}};
  }
  if (d.fr.contains(y, source)) {
    return PatternInstance{Pattern::kCoRRfrrf, {x, y, source}};
  }
  return std::nullopt;
}

bool pattern_validates(const Execution& e, const DerivedRelations& d,
                       const PatternInstance& p) {
  const auto& ev = p.events;
  const std::size_t expected =
      (p.pattern == Pattern::kCoRWcorf || p.pattern == Pattern::kCoRRfrrf) ? 3 : 2;
  if (ev.size() != expected || !d.pol.contains(ev[0], ev[1])) return false;
  switch (p.pattern) {
    case Pattern::kCoWW: return e.co.contains(ev[1], ev[0]);
    case Pattern::kCoRWrf: return e.rf.contains(ev[1], ev[0]);
    case Pattern::kCoWRfr: return d.fr.contains(ev[1], ev[0]);
    case Pattern::kCoRWcorf:
      return e.co.contains(ev[1], ev[2]) && e.rf.contains(ev[2], ev[0]);
    case Pattern::kCoRRfrrf:
      return d.fr.contains(ev[1], ev[2]) && e.rf.contains(ev[2], ev[0]);
  }
  return false;
}

}  // namespace

Architecture sc_architecture() {
  return Architecture{"sc", [](const Execution& e) {
                        const DerivedRelations d = derive_unchecked(e);
                        const Relation write_pairs = d.com_plus.filter(
                            [&](EventId a, EventId b) {
                              return e.event(a).is_write() && e.event(b).is_write();
                            });
                        return ArchitectureResult{e.po, Relation(e.universe()),
                                                  union_of(e.co, write_pairs)};
                      }};
}

Architecture store_buffer_architecture() {
  return Architecture{"sb", [](const Execution& e) {
                        // Stores may be delayed past later loads.
                        const Relation ppo = e.po.filter([&](EventId a, EventId b) {
                          return !(e.event(a).is_write() && e.event(b).is_read());
                        });
                        return ArchitectureResult{ppo, Relation(e.universe()), e.co};
                      }};
}

std::optional<Architecture> find_architecture(std::string_view name) {
  if (name == "sc") return sc_architecture();
  if (name == "sb") return store_buffer_architecture();
  return std::nullopt;
}

std::vector<std::string> architecture_names() { return {"sc", "sb"}; }

void validate_architecture_result(const Execution& e, const ArchitectureResult& r) {
  const EventSet universe = e.universe();
  if (r.ppo.universe() != universe || r.fence.universe() != universe ||
      r.prop.universe() != universe) {
    throw UsageError("architecture result has the wrong universe");
  }
  if (!r.ppo.subset_of(e.po)) throw UsageError("architecture ppo is not a subset of po");
  for (const auto& [a, b] : r.prop.pairs()) {
    if (!e.event(a).is_write() || !e.event(b).is_write()) {
      throw UsageError("architecture prop relates a non-write event");
    }
  }
}

ArchitectureResult apply_architecture(const Architecture& arch, const Execution& e) {
  ArchitectureResult r = arch.derive(e);
  validate_architecture_result(e, r);
  return r;
}

Relation happens_before(const DerivedRelations& d, const ArchitectureResult& r) {
  return union_of(union_of(r.ppo, r.fence), d.rfe);
}

AxiomVerdict sc_full(const Execution& e) { return sc_full(e, checked_derive(e)); }

AxiomVerdict sc_full(const Execution& e, const DerivedRelations& d) {
  return acyclicity_verdict(Axiom::kFullSC, union_of(e.po, d.com));
}

AxiomVerdict sc_per_location_1(const Execution& e) {
  return sc_per_location_1(e, checked_derive(e));
}

AxiomVerdict sc_per_location_1(const Execution&, const DerivedRelations& d) {
  return acyclicity_verdict(Axiom::kScPerLocation1, union_of(d.pol, d.com));
}

AxiomVerdict sc_per_location_2(const Execution& e) {
  return sc_per_location_2(e, checked_derive(e));
}

AxiomVerdict sc_per_location_2(const Execution&, const DerivedRelations& d) {
  for (const auto& [x, y] : d.pol.pairs()) {
    if (d.com_plus.contains(y, x)) {
      return {Axiom::kScPerLocation2, false, Witness{EventPair{x, y}}};
    }
  }
  return {Axiom::kScPerLocation2, true, std::nullopt};
}

std::vector<PatternInstance> find_forbidden_patterns(const Execution& e) {
  return find_forbidden_patterns(e, checked_derive(e));
}

std::vector<PatternInstance> find_forbidden_patterns(const Execution& e,
                                                     const DerivedRelations& d) {
  std::vector<PatternInstance> out;
  for (const auto& [x, y] : d.pol.pairs()) {
    if (auto p = classify_back_edge(e, d, x, y)) out.push_back(std::move(*p));
  }
  return out;
}

AxiomVerdict no_thin_air(const Execution& e, const Architecture& a) {
  return no_thin_air(checked_derive(e), apply_architecture(a, e));
}

AxiomVerdict no_thin_air(const DerivedRelations& d, const ArchitectureResult& r) {
  return acyclicity_verdict(Axiom::kNoThinAir, happens_before(d, r));
}

AxiomVerdict observation(const Execution& e, const Architecture& a) {
  return observation(checked_derive(e), apply_architecture(a, e));
}

AxiomVerdict observation(const DerivedRelations& d, const ArchitectureResult& r) {
  const Relation rel = observation_relation(d, r);
  for (auto x : rel.universe().members()) {
    if (rel.contains(x, x)) return {Axiom::kObservation, false, Witness{FixedPoint{x}}};
  }
  return {Axiom::kObservation, true, std::nullopt};
}

AxiomVerdict propagation(const Execution& e, const Architecture& a) {
  if (auto v = validate(e); !v.empty()) {
    throw UsageError("propagation: ill-formed execution");
  }
  return propagation(e, apply_architecture(a, e));
}

AxiomVerdict propagation(const Execution& e, const ArchitectureResult& r) {
  return acyclicity_verdict(Axiom::kPropagation, union_of(e.co, r.prop));
}

std::vector<AxiomVerdict> check_all(const Execution& e, const Architecture& a) {
  const DerivedRelations d = checked_derive(e);
  const ArchitectureResult r = apply_architecture(a, e);
  std::vector<AxiomVerdict> out;
  out.reserve(7);
  out.push_back(sc_per_location_1(e, d));
  out.push_back(sc_per_location_2(e, d));
  auto patterns = find_forbidden_patterns(e, d);
  if (patterns.empty()) {
    out.push_back({Axiom::kFivePatterns, true, std::nullopt});
  } else {
    out.push_back({Axiom::kFivePatterns, false, Witness{std::move(patterns.front())}});
  }
  out.push_back(sc_full(e, d));
  out.push_back(no_thin_air(d, r));
  out.push_back(observation(d, r));
  out.push_back(propagation(e, r));
  return out;
}

bool witness_validates(const Execution& e, const Architecture& a, const AxiomVerdict& v) {
  if (v.holds) return !v.witness.has_value();
  if (!v.witness) return false;
  const DerivedRelations d = checked_derive(e);
  const Witness& w = *v.witness;
  const auto cycle_on = [&](const Relation& r) {
    const auto* c = std::get_if<CycleWitness>(&w);
    return c != nullptr && c->validates(r);
  };
  switch (v.axiom) {
    case Axiom::kScPerLocation1: return cycle_on(union_of(d.pol, d.com));
    case Axiom::kFullSC: return cycle_on(union_of(e.po, d.com));
    case Axiom::kScPerLocation2: {
      const auto* p = std::get_if<EventPair>(&w);
      return p != nullptr && d.pol.contains(p->first, p->second) &&
             d.com_plus.contains(p->second, p->first);
    }
    case Axiom::kFivePatterns: {
      const auto* p = std::get_if<PatternInstance>(&w);
      return p != nullptr && pattern_validates(e, d, *p);
    }
    case Axiom::kNoThinAir:
      return cycle_on(happens_before(d, apply_architecture(a, e)));
    case Axiom::kObservation: {
      const auto* f = std::get_if<FixedPoint>(&w);
      return f != nullptr &&
             observation_relation(d, apply_architecture(a, e)).contains(f->event, f->event);
    }
    case Axiom::kPropagation:
      return cycle_on(union_of(e.co, apply_architecture(a, e).prop));
  }
  return false;
}

const AxiomVerdict& verdict_for(const std::vector<AxiomVerdict>& verdicts, Axiom a) {
  for (const auto& v : verdicts) {
    if (v.axiom == a) return v;
  }
  throw std::out_of_range("no verdict for axiom " + std::string(to_string(a)));
}

}  // namespace axcat
