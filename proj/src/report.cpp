#include "axcat/report.hpp"

namespace axcat {

namespace {

Json ids_to_json(const std::vector<EventId>& ids) {
  Json out = Json::array();
  for (auto id : ids) out.push_back(id.value);
  return out;
}

}  // namespace

Json witness_to_json(const Witness& w) {
  Json j;
  if (const auto* c = std::get_if<CycleWitness>(&w)) {
    j["cycle"] = ids_to_json(c->nodes);
  } else if (const auto* p = std::get_if<PatternInstance>(&w)) {
    j["pattern"] = to_string(p->pattern);
    j["events"] = ids_to_json(p->events);
  } else if (const auto* pair = std::get_if<EventPair>(&w)) {
    j["pair"] = Json::array({pair->first.value, pair->second.value});
  } else {
    j["event"] = std::get<FixedPoint>(w).event.value;
  }
  return j;
}

Json verdict_to_json(const AxiomVerdict& v) {
  Json j;
  j["axiom"] = to_string(v.axiom);
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

Json outcome_to_json(const Outcome& o) {
  Json regs = Json::object();
  for (const auto& [ref, v] : o.registers) {
    regs["P" + std::to_string(ref.proc) + ":" + ref.reg] = v;
  }
  Json mem = Json::object();
  for (const auto& [addr, v] : o.final_memory) mem[addr] = v;
  Json j;
  j["registers"] = std::move(regs);
  j["memory"] = std::move(mem);
  return j;
}

Json collapse_to_json(const CollapseTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json js;
    js["cycle"] = ids_to_json(s.cycle);
    js["rule"] = to_string(s.rule);
    if (s.anchor_case) js["anchor_case"] = to_string(*s.anchor_case);
    steps.push_back(std::move(js));
  }
  Json j;
  j["pair"] = Json::array({t.pair.x.value, t.pair.y.value});
  j["steps"] = std::move(steps);
  return j;
}

Json enumeration_to_json(const EnumerationReport& r, bool dump_executions) {
  static constexpr AxiomSetKind kKinds[] = {AxiomSetKind::kSC, AxiomSetKind::kScPerLocation,
                                            AxiomSetKind::kFramework};
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "enumerate";
  j["test"] = r.test_name;
  j["arch"] = r.axiom_set.arch.name;
  j["candidate_count"] = r.candidates.size();

  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    Json jc;
    jc["index"] = c.index;
    jc["outcome"] = outcome_to_json(c.outcome);
    Json cons = Json::object();
    for (auto k : kKinds) cons[std::string(to_string(k))] = consistent(c.verdicts, k);
    jc["consistent"] = std::move(cons);
    Json verdicts = Json::array();
    for (const auto& v : c.verdicts) verdicts.push_back(verdict_to_json(v));
    jc["verdicts"] = std::move(verdicts);
    if (dump_executions) jc["execution"] = execution_to_json(c.execution);
    candidates.push_back(std::move(jc));
  }
  j["candidates"] = std::move(candidates);

  std::vector<std::map<Outcome, bool>> summaries;
  for (auto k : kKinds) summaries.push_back(r.summary_under(k));
  Json outcomes = Json::array();
  for (const auto& [outcome, unused] : summaries.front()) {
    Json jo;
    jo["outcome"] = outcome_to_json(outcome);
    Json allowed = Json::object();
    for (std::size_t i = 0; i < std::size(kKinds); ++i) {
      allowed[std::string(to_string(kKinds[i]))] = summaries[i].at(outcome);
    }
    jo["allowed"] = std::move(allowed);
    outcomes.push_back(std::move(jo));
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

std::string describe_cycle(const Execution& e, const std::vector<EventId>& nodes,
                           const std::vector<NamedRelation>& labels) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const EventId a = nodes[i];
    const EventId b = nodes[(i + 1) % nodes.size()];
    std::string label = "?";
    for (const auto& [name, rel] : labels) {
      if (rel->contains(a, b)) {
        label = name;
        break;
      }
    }
    out += describe(e, a) + " -" + label + "-> ";
  }
  if (!nodes.empty()) out += describe(e, nodes.front());
  return out;
}

}  // namespace axcat
