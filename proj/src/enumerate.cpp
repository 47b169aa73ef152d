#include "axcat/enumerate.hpp"

#include <algorithm>

#include "axcat/errors.hpp"

namespace axcat {

std::string to_string(const Outcome& o) {
  std::string out;
  for (const auto& [ref, v] : o.registers) {
    if (!out.empty()) out += ' ';
    out += "P" + std::to_string(ref.proc) + ":" + ref.reg + "=" + std::to_string(v);
  }
  if (!out.empty()) out += " |";
  for (const auto& [addr, v] : o.final_memory) {
    if (!out.empty()) out += ' ';
    out += addr + "=" + std::to_string(v);
  }
  return out;
}

bool satisfies(const Outcome& o, const Condition& c) {
  return std::all_of(c.atoms.begin(), c.atoms.end(), [&](const ConditionAtom& a) {
    if (a.proc) {
      auto it = o.registers.find(RegisterRef{*a.proc, a.name});
      return it != o.registers.end() && it->second == a.value;
    }
    auto it = o.final_memory.find(a.name);
    return it != o.final_memory.end() && it->second == a.value;
  });
}

CompiledTest compile(const LitmusTest& t, std::size_t max_events) {
  check_litmus(t);
  std::set<std::string> names;
  std::size_t instructions = 0;
  for (const auto& [addr, v] : t.initial) names.insert(addr);
  for (const auto& body : t.processes) {
    instructions += body.size();
    for (const auto& ins : body) std::visit([&](const auto& i) { names.insert(i.addr); }, ins);
  }
  if (instructions == 0) throw UsageError("litmus test has no instructions");
  if (instructions > max_events) {
    throw CapExceeded("litmus test has " + std::to_string(instructions) +
                      " events; the cap is " + std::to_string(max_events));
  }

  CompiledTest c;
  c.skeleton.addresses.assign(names.begin(), names.end());
  const auto address_of = [&](const std::string& name) {
    auto it = std::lower_bound(c.skeleton.addresses.begin(), c.skeleton.addresses.end(), name);
    return Address{static_cast<std::uint32_t>(it - c.skeleton.addresses.begin())};
  };
  for (const auto& name : c.skeleton.addresses) {
    auto it = t.initial.find(name);
    c.skeleton.initial.push_back(it == t.initial.end() ? 0 : it->second);
  }
  for (std::size_t p = 0; p < t.processes.size(); ++p) {
    const auto proc = static_cast<ProcId>(p);
    for (const auto& ins : t.processes[p]) {
      if (const auto* w = std::get_if<WriteInstr>(&ins)) {
        c.skeleton.events.push_back({proc, AccessKind::kWrite, address_of(w->addr), w->value});
        c.registers.emplace_back();
      } else {
        const auto& r = std::get<ReadInstr>(ins);
        c.skeleton.events.push_back({proc, AccessKind::kRead, address_of(r.addr), 0});
        c.registers.push_back(RegisterRef{proc, r.reg});
      }
    }
  }
  check_skeleton(c.skeleton);
  return c;
}

Outcome outcome_of(const CompiledTest& c, const Execution& e) {
  Outcome o;
  for (std::size_t i = 0; i < c.registers.size(); ++i) {
    if (c.registers[i]) o.registers[*c.registers[i]] = e.event(program_event(c.skeleton, i)).value;
  }
  for (std::size_t a = 0; a < c.skeleton.addresses.size(); ++a) {
    const Address addr{static_cast<std::uint32_t>(a)};
    // The co-maximal write has no co successor.
    for (const Event& ev : e.events) {
      if (ev.is_write() && ev.addr == addr && e.co.successors(ev.id).empty()) {
        o.final_memory[c.skeleton.addresses[a]] = ev.value;
      }
    }
  }
  return o;
}

std::string_view to_string(AxiomSetKind k) {
  switch (k) {
    case AxiomSetKind::kSC: return "sc";
    case AxiomSetKind::kScPerLocation: return "scpl";
    case AxiomSetKind::kFramework: return "framework";
  }
  return "unknown";
}

std::optional<AxiomSetKind> parse_axiom_set_kind(std::string_view s) {
  if (s == "sc") return AxiomSetKind::kSC;
  if (s == "scpl") return AxiomSetKind::kScPerLocation;
  if (s == "framework") return AxiomSetKind::kFramework;
  return std::nullopt;
}

bool consistent(const std::vector<AxiomVerdict>& verdicts, AxiomSetKind kind) {
  const auto holds = [&](Axiom a) { return verdict_for(verdicts, a).holds; };
  switch (kind) {
    case AxiomSetKind::kSC: return holds(Axiom::kFullSC);
    case AxiomSetKind::kScPerLocation: return holds(Axiom::kScPerLocation1);
    case AxiomSetKind::kFramework:
      return holds(Axiom::kScPerLocation1) && holds(Axiom::kNoThinAir) &&
             holds(Axiom::kObservation) && holds(Axiom::kPropagation);
  }
  return false;
}

std::vector<Execution> enumerate_candidates(const LitmusTest& t,
                                            const EnumerationOptions& opts) {
  const CompiledTest c = compile(t, opts.max_events);
  const std::uint64_t total = candidate_count(c.skeleton);
  auto all = parallel_generate(
      static_cast<std::size_t>(total),
      [&](std::size_t i) { return candidate_at(c.skeleton, i); }, opts.schedule);
  std::erase_if(all, [](const Execution& e) { return !validate(e).empty(); });
  return all;
}

std::set<Outcome> EnumerationReport::allowed() const {
  std::set<Outcome> out;
  for (const auto& [o, ok] : summary) {
    if (ok) out.insert(o);
  }
  return out;
}

std::map<Outcome, bool> EnumerationReport::summary_under(AxiomSetKind kind) const {
  std::map<Outcome, bool> out;
  for (const auto& c : candidates) {
    bool& allowed = out.try_emplace(c.outcome, false).first->second;
    allowed = allowed || consistent(c.verdicts, kind);
  }
  return out;
}

EnumerationReport allowed_outcomes(const LitmusTest& t, const AxiomSet& axioms,
                                   const EnumerationOptions& opts) {
  const CompiledTest c = compile(t, opts.max_events);
  const std::uint64_t total = candidate_count(c.skeleton);

  EnumerationReport report;
  report.test_name = t.name;
  report.axiom_set = axioms;
  report.candidates = parallel_generate(
      static_cast<std::size_t>(total),
      [&](std::size_t i) {
        CandidateReport cr;
        cr.index = i;
        cr.execution = candidate_at(c.skeleton, i);
        cr.outcome = outcome_of(c, cr.execution);
        cr.verdicts = check_all(cr.execution, axioms.arch);
        cr.consistent = consistent(cr.verdicts, axioms.kind);
        return cr;
      },
      opts.schedule);
  report.summary = report.summary_under(axioms.kind);
  return report;
}

}  // namespace axcat
