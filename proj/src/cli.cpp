#include "axcat/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "axcat/enumerate.hpp"
#include "axcat/report.hpp"

namespace axcat {

namespace {

struct Options {
  std::string file;
  std::string axioms = "sc";
  std::string arch = "sc";
  std::string outcome;
  bool json = false;
  bool dump_executions = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LitmusTest load_test(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_litmus(text);
  } catch (const LitmusSyntaxError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

EnumerationOptions enumeration_options() {
  EnumerationOptions opts;
  if (const char* env = std::getenv("AXCAT_MAX_EVENTS"); env != nullptr && *env != '\0') {
    std::size_t cap = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec != std::errc() || ptr != end || cap == 0) {
      throw UsageError(std::string("AXCAT_MAX_EVENTS must be a positive integer, got '") +
                       env + "'");
    }
    opts.max_events = cap;
  }
  return opts;
}

AxiomSet axiom_set(const Options& o) {
  const auto kind = parse_axiom_set_kind(o.axioms);
  if (!kind) throw UsageError("unknown axiom set '" + o.axioms + "'");
  auto arch = find_architecture(o.arch);
  if (!arch) {
    std::string names;
    for (const auto& n : architecture_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError("unknown architecture '" + o.arch + "' (known: " + names + ")");
  }
  return AxiomSet{*kind, std::move(*arch)};
}

std::vector<Axiom> axioms_of(AxiomSetKind kind) {
  switch (kind) {
    case AxiomSetKind::kSC: return {Axiom::kFullSC};
    case AxiomSetKind::kScPerLocation: return {Axiom::kScPerLocation1};
    case AxiomSetKind::kFramework:
      return {Axiom::kScPerLocation1, Axiom::kNoThinAir, Axiom::kObservation,
              Axiom::kPropagation};
  }
  return {};
}

std::string failing_axioms(const CandidateReport& c, AxiomSetKind kind) {
  std::string out;
  for (Axiom a : axioms_of(kind)) {
    if (!verdict_for(c.verdicts, a).holds) {
      out += (out.empty() ? "" : ", ") + std::string(to_string(a));
    }
  }
  return out;
}

Json verdicts_json(const std::vector<AxiomVerdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) out.push_back(verdict_to_json(v));
  return out;
}

int run_check(const Options& o, std::ostream& out) {
  const LitmusTest test = load_test(o.file);
  if (!test.condition) throw UsageError(o.file + ": check needs an exists clause");
  const AxiomSet axioms = axiom_set(o);
  const EnumerationReport report = allowed_outcomes(test, axioms, enumeration_options());

  std::vector<const CandidateReport*> matching;
  for (const auto& c : report.candidates) {
    if (satisfies(c.outcome, *test.condition)) matching.push_back(&c);
  }
  bool allowed = false;
  for (const auto* c : matching) allowed = allowed || c->consistent;
  const char* result = allowed ? "allowed" : "forbidden";

  if (o.json) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = "check";
    j["test"] = test.name;
    j["axioms"] = to_string(axioms.kind);
    j["arch"] = axioms.arch.name;
    j["condition"] = to_string(*test.condition);
    j["candidate_count"] = report.candidates.size();
    Json jm = Json::array();
    for (const auto* c : matching) {
      Json jc;
      jc["index"] = c->index;
      jc["outcome"] = outcome_to_json(c->outcome);
      jc["consistent"] = c->consistent;
      jc["verdicts"] = verdicts_json(c->verdicts);
      jm.push_back(std::move(jc));
    }
    j["matching"] = std::move(jm);
    j["result"] = result;
    out << j.dump(2) << '\n';
  } else {
    out << "test " << test.name << '\n'
        << "axioms: " << to_string(axioms.kind) << " (arch " << axioms.arch.name << ")\n"
        << "condition: " << to_string(*test.condition) << '\n'
        << "candidates: " << report.candidates.size() << ", matching: " << matching.size()
        << '\n';
    for (const auto* c : matching) {
      out << "  #" << c->index << ' ' << to_string(c->outcome) << ": ";
      if (c->consistent) {
        out << "consistent\n";
      } else {
        out << "inconsistent (" << failing_axioms(*c, axioms.kind) << " fails)\n";
      }
    }
    out << "result: " << result << '\n';
  }
  return allowed ? kExitAllowed : kExitForbidden;
}

int run_enumerate(const Options& o, std::ostream& out) {
  const LitmusTest test = load_test(o.file);
  Options sc = o;
  sc.axioms = "sc";
  const EnumerationReport report = allowed_outcomes(test, axiom_set(sc), enumeration_options());
  if (o.json) {
    out << enumeration_to_json(report, o.dump_executions).dump(2) << '\n';
    return 0;
  }
  out << "test " << test.name << " (arch " << report.axiom_set.arch.name << ")\n"
      << "candidates: " << report.candidates.size() << '\n';
  for (const auto& c : report.candidates) {
    out << "  #" << c.index << ' ' << to_string(c.outcome) << "  sc="
        << consistent(c.verdicts, AxiomSetKind::kSC)
        << " scpl=" << consistent(c.verdicts, AxiomSetKind::kScPerLocation)
        << " framework=" << consistent(c.verdicts, AxiomSetKind::kFramework) << '\n';
    if (o.dump_executions) out << "    " << execution_to_json(c.execution).dump() << '\n';
  }
  const auto sc_summary = report.summary_under(AxiomSetKind::kSC);
  const auto scpl_summary = report.summary_under(AxiomSetKind::kScPerLocation);
  const auto fw_summary = report.summary_under(AxiomSetKind::kFramework);
  out << "outcomes:\n";
  for (const auto& [outcome, allowed] : sc_summary) {
    out << "  " << to_string(outcome) << "  sc=" << (allowed ? "allowed" : "forbidden")
        << " scpl=" << (scpl_summary.at(outcome) ? "allowed" : "forbidden")
        << " framework=" << (fw_summary.at(outcome) ? "allowed" : "forbidden") << '\n';
  }
  return 0;
}

// Witnesses for every axiom of the set that the candidate violates.
Json explain_candidate(const CandidateReport& c, const AxiomSet& axioms,
                       std::vector<std::string>& lines) {
  const Execution& e = c.execution;
  const DerivedRelations d = derive(e);
  Json failures = Json::array();
  for (Axiom a : axioms_of(axioms.kind)) {
    const AxiomVerdict& v = verdict_for(c.verdicts, a);
    if (v.holds) continue;
    Json jf = verdict_to_json(v);
    if (a == Axiom::kFullSC) {
      const auto& cycle = std::get<CycleWitness>(*v.witness);
      lines.push_back("  sc fails; shortest cycle of po | com:");
      lines.push_back("    " + describe_cycle(e, cycle.nodes,
                                                {{"po", &e.po}, {"co", &e.co}, {"rf", &e.rf},
                                                 {"fr", &d.fr}}));
    } else if (a == Axiom::kScPerLocation1) {
      const auto& cycle = std::get<CycleWitness>(*v.witness);
      lines.push_back("  sc-per-location fails; cycle of pol | com:");
      lines.push_back("    " + describe_cycle(e, cycle.nodes,
                                                {{"pol", &d.pol}, {"co", &e.co}, {"rf", &e.rf},
                                                 {"fr", &d.fr}}));
      const CollapseTrace trace = collapse_cycle_traced(e, d, cycle);
      for (const auto& step : trace.steps) {
        std::string s = "    collapse " + std::string(to_string(step.rule)) + " on [";
        for (std::size_t i = 0; i < step.cycle.size(); ++i) {
          s += (i ? " e" : "e") + std::to_string(step.cycle[i].value);
        }
        s += "]";
        if (step.anchor_case) s += " (" + std::string(to_string(*step.anchor_case)) + ")";
        lines.push_back(s);
      }
      lines.push_back("  witness pair: " + describe(e, trace.pair.x) + " -pol-> " +
                      describe(e, trace.pair.y) + " -com+-> back");
      jf["collapse"] = collapse_to_json(trace);
      Json patterns = Json::array();
      for (const auto& p : find_forbidden_patterns(e, d)) {
        lines.push_back("  pattern " + std::string(to_string(p.pattern)) + ": " +
                        describe_cycle(e, p.events,
                                       {{"pol", &d.pol}, {"co", &e.co}, {"rf", &e.rf},
                                        {"fr", &d.fr}}));
        Json jp;
        jp["pattern"] = to_string(p.pattern);
        Json ids = Json::array();
        for (auto id : p.events) ids.push_back(id.value);
        jp["events"] = std::move(ids);
        patterns.push_back(std::move(jp));
      }
      jf["patterns"] = std::move(patterns);
    } else {
      const ArchitectureResult r = apply_architecture(axioms.arch, e);
      const Relation hb = happens_before(d, r);
      if (a == Axiom::kNoThinAir) {
        const auto& cycle = std::get<CycleWitness>(*v.witness);
        lines.push_back("  no-thin-air fails; cycle of hb:");
        lines.push_back("    " + describe_cycle(e, cycle.nodes,
                                                  {{"ppo", &r.ppo}, {"fence", &r.fence},
                                                   {"rfe", &d.rfe}}));
      } else if (a == Axiom::kObservation) {
        lines.push_back("  observation fails; " +
                        describe(e, std::get<FixedPoint>(*v.witness).event) +
                        " reaches itself by fre;prop;hb*");
      } else {
        const auto& cycle = std::get<CycleWitness>(*v.witness);
        lines.push_back("  propagation fails; cycle of co | prop:");
        lines.push_back("    " + describe_cycle(e, cycle.nodes,
                                                  {{"co", &e.co}, {"prop", &r.prop}}));
      }
    }
    failures.push_back(std::move(jf));
  }
  return failures;
}

int run_explain(const Options& o, std::ostream& out) {
  const LitmusTest test = load_test(o.file);
  Condition binding;
  try {
    binding = parse_condition(o.outcome, test);
  } catch (const LitmusSyntaxError& e) {
    throw UsageError(std::string("--outcome:") + e.what());
  }
  const AxiomSet axioms = axiom_set(o);
  const EnumerationReport report = allowed_outcomes(test, axioms, enumeration_options());

  std::vector<std::string> lines;
  Json candidates = Json::array();
  bool allowed = false;
  for (const auto& c : report.candidates) {
    if (!satisfies(c.outcome, binding)) continue;
    Json jc;
    jc["index"] = c.index;
    jc["outcome"] = outcome_to_json(c.outcome);
    jc["consistent"] = c.consistent;
    if (c.consistent) {
      allowed = true;
      lines.push_back("candidate #" + std::to_string(c.index) + " " + to_string(c.outcome) +
                      ": consistent");
    } else {
      lines.push_back("candidate #" + std::to_string(c.index) + " " + to_string(c.outcome) +
                      ": forbidden");
      jc["failures"] = explain_candidate(c, axioms, lines);
    }
    candidates.push_back(std::move(jc));
  }
  if (candidates.empty()) lines.push_back("no candidate execution produces this outcome");
  const char* result = allowed ? "allowed" : "forbidden";

  if (o.json) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = "explain";
    j["test"] = test.name;
    j["axioms"] = to_string(axioms.kind);
    j["arch"] = axioms.arch.name;
    j["outcome"] = to_string(binding);
    j["candidates"] = std::move(candidates);
    j["result"] = result;
    out << j.dump(2) << '\n';
  } else {
    out << "test " << test.name << ", outcome " << to_string(binding) << " under "
        << to_string(axioms.kind) << " (arch " << axioms.arch.name << ")\n";
    for (const auto& l : lines) out << l << '\n';
    out << "result: " << result << '\n';
  }
  return allowed ? kExitAllowed : kExitForbidden;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Axiomatic weak-memory checker for litmus tests", "axcat"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Decide whether the exists outcome is allowed");
  check->add_option("file", o.file, "Litmus file")->required();
  check->add_option("--axioms", o.axioms, "sc | scpl | framework");
  check->add_option("--arch", o.arch, "Architecture for the framework axioms");
  check->add_flag("--json", o.json, "Emit a JSON report");

  auto* enumerate = app.add_subcommand("enumerate", "List every candidate execution");
  enumerate->add_option("file", o.file, "Litmus file")->required();
  enumerate->add_option("--arch", o.arch, "Architecture for the framework axioms");
  enumerate->add_flag("--json", o.json, "Emit a JSON report");
  enumerate->add_flag("--dump-executions", o.dump_executions, "Include each execution");

  auto* explain = app.add_subcommand("explain", "Show why an outcome is forbidden");
  explain->add_option("file", o.file, "Litmus file")->required();
  explain->add_option("--outcome", o.outcome, "e.g. \"P0:r0=0 /\\ P1:r1=0\"")->required();
  explain->add_option("--axioms", o.axioms, "sc | scpl | framework");
  explain->add_option("--arch", o.arch, "Architecture for the framework axioms");
  explain->add_flag("--json", o.json, "Emit a JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : kExitError;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (enumerate->parsed()) return run_enumerate(o, out);
    return run_explain(o, out);
  } catch (const std::exception& e) {
    err << "axcat: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace axcat
