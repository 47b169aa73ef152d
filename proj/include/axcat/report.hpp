#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axcat/axioms.hpp"
#include "axcat/collapse.hpp"
#include "axcat/enumerate.hpp"
#include "axcat/execution_json.hpp"

namespace axcat {

inline constexpr int kReportSchema = 1;

Json witness_to_json(const Witness& w);
Json verdict_to_json(const AxiomVerdict& v);
Json outcome_to_json(const Outcome& o);
Json collapse_to_json(const CollapseTrace& t);

// The `enumerate` document: every candidate with its verdicts, and every
// outcome with its allowed flag under sc, scpl and framework.
Json enumeration_to_json(const EnumerationReport& r, bool dump_executions);

using NamedRelation = std::pair<std::string, const Relation*>;

// "e2 P0:W x=1 -po-> e3 P0:R y=0 -fr-> e2 ..." labelling each edge with the
// first relation in `labels` that contains it.
std::string describe_cycle(const Execution& e, const std::vector<EventId>& nodes,
                           const std::vector<NamedRelation>& labels);

}  // namespace axcat
