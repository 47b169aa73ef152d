#include "axcat/execution_json.hpp"

#include <algorithm>

#include "axcat/errors.hpp"

namespace axcat {

Json relation_to_json(const Relation& r) {
  Json out = Json::array();
  for (const auto& [a, b] : r.pairs()) out.push_back(Json::array({a.value, b.value}));
  return out;
}

Json execution_to_json(const Execution& e) {
  Json j;
  j["addresses"] = e.addresses;
  Json events = Json::array();
  for (const Event& ev : e.events) {
    Json je;
    je["id"] = ev.id.value;
    je["proc"] = ev.proc;
    je["kind"] = ev.is_write() ? "W" : "R";
    je["addr"] = e.address_name(ev.addr);
    je["value"] = ev.value;
    events.push_back(std::move(je));
  }
  j["events"] = std::move(events);
  j["po"] = relation_to_json(e.po);
  j["co"] = relation_to_json(e.co);
  j["rf"] = relation_to_json(e.rf);
  return j;
}

namespace {

Relation relation_from_json(const Json& j, EventSet universe, const char* name) {
  Relation r(universe);
  if (!j.is_array()) throw UsageError(std::string(name) + ": expected an array of pairs");
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned()) {
      throw UsageError(std::string(name) + ": malformed pair " + p.dump());
    }
    r.insert(EventId{p[0].get<std::uint32_t>()}, EventId{p[1].get<std::uint32_t>()});
  }
  return r;
}

}  // namespace

Execution execution_from_json(const Json& j) {
  try {
    Execution e;
    e.addresses = j.at("addresses").get<std::vector<std::string>>();
    const auto& events = j.at("events");
    if (events.size() > kMaxEvents) throw CapExceeded("too many events");
    for (const auto& je : events) {
      Event ev;
      ev.id = EventId{je.at("id").get<std::uint32_t>()};
      ev.proc = je.at("proc").get<ProcId>();
      const auto kind = je.at("kind").get<std::string>();
      if (kind != "W" && kind != "R") throw UsageError("event kind must be W or R");
      ev.kind = kind == "W" ? AccessKind::kWrite : AccessKind::kRead;
      const auto addr = je.at("addr").get<std::string>();
      auto it = std::find(e.addresses.begin(), e.addresses.end(), addr);
      if (it == e.addresses.end()) throw UsageError("unknown address " + addr);
      ev.addr = Address{static_cast<std::uint32_t>(it - e.addresses.begin())};
      ev.value = je.at("value").get<Value>();
      e.events.push_back(ev);
    }
    const EventSet universe = e.universe();
    e.po = relation_from_json(j.at("po"), universe, "po");
    e.co = relation_from_json(j.at("co"), universe, "co");
    e.rf = relation_from_json(j.at("rf"), universe, "rf");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("malformed execution document: ") + ex.what());
  }
}

}  // namespace axcat
