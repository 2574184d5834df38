#include "dlm/io.hpp"

#include <fstream>
#include <set>

#include "dlm/action.hpp"

namespace dlm {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw StructureError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw StructureError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& doc, const char* key) {
  const json& arr = field(doc, key);
  if (!arr.is_array()) throw StructureError(std::string("field '") + key + "' must be a list");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw StructureError(std::string("field '") + key + "' must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> edge_list(const json& edges, const std::string& agent) {
  if (!edges.is_array()) throw StructureError("relation of '" + agent + "' must be a list of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw StructureError("relation of '" + agent + "' must be a list of [from, to] pairs");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

Signature signature_of(const json& doc) {
  std::vector<AgentId> agents;
  std::vector<PropId> props;
  for (auto& a : string_list(doc, "agents")) agents.push_back({std::move(a)});
  for (auto& p : string_list(doc, "props")) props.push_back({std::move(p)});
  try {
    return {std::move(agents), std::move(props)};
  } catch (const std::invalid_argument& e) {
    throw StructureError(e.what());
  }
}

}  // namespace

PointedModel model_from_json(const json& doc) {
  const Signature sig = signature_of(doc);
  const auto worlds = string_list(doc, "worlds");
  if (worlds.empty()) throw StructureError("a model needs at least one world");
  if (std::set<std::string>(worlds.begin(), worlds.end()).size() != worlds.size()) {
    throw StructureError("duplicate world name");
  }
  Model m(sig, worlds);

  const json& rels = field(doc, "relations");
  if (!rels.is_object()) throw StructureError("'relations' must map agents to edge lists");
  for (const auto& [agent, edges] : rels.items()) {
    if (!sig.has_agent({agent})) throw StructureError("relation for unknown agent '" + agent + "'");
    for (const auto& [from, to] : edge_list(edges, agent)) m.add_edge(AgentId{agent}, from, to);
  }

  const json& val = field(doc, "valuation");
  if (!val.is_object()) throw StructureError("'valuation' must map worlds to atom lists");
  for (const auto& [world, atoms] : val.items()) {
    const std::size_t w = m.require_world(world);
    if (!atoms.is_array()) throw StructureError("valuation of '" + world + "' must be a list");
    for (const auto& a : atoms) {
      if (!a.is_string()) throw StructureError("valuation of '" + world + "' must contain strings");
      m.set_atom(parse_atom(a.get<std::string>(), sig), w);
    }
  }

  const json& point = field(doc, "point");
  if (!point.is_string()) throw StructureError("'point' must be a world name");
  return point_at(std::move(m), point.get<std::string>());
}

json model_to_json(const PointedModel& pm) {
  const Model& m = pm.model;
  const Signature& sig = m.signature();
  json doc;
  doc["agents"] = json::array();
  for (const auto& a : sig.agents()) doc["agents"].push_back(a.name);
  doc["props"] = json::array();
  for (const auto& p : sig.props()) doc["props"].push_back(p.name);
  doc["worlds"] = m.worlds();
  doc["relations"] = json::object();
  for (const auto& a : sig.agents()) {
    json edges = json::array();
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      const WorldSet& succ = m.successors(a, w);
      for (auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next(v)) {
        edges.push_back({m.world_name(w), m.world_name(v)});
      }
    }
    doc["relations"][a.name] = std::move(edges);
  }
  doc["valuation"] = json::object();
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    json atoms = json::array();
    for (const Atom& a : m.atoms_at(w)) atoms.push_back(to_string(a));
    doc["valuation"][m.world_name(w)] = std::move(atoms);
  }
  doc["point"] = pm.point_name();
  return doc;
}

PointedAction action_from_json(const json& doc, const Signature& sig, const std::string& name,
                               const ActionRegistry& actions) {
  const auto events = string_list(doc, "events");
  if (events.empty()) throw StructureError("an action needs at least one event");
  if (std::set<std::string>(events.begin(), events.end()).size() != events.size()) {
    throw StructureError("duplicate event name");
  }
  auto model = std::make_shared<ActionModel>(events);
  auto event = [&](const std::string& e) {
    auto idx = model->event_index(e);
    if (!idx) throw StructureError("unknown event '" + e + "'");
    return *idx;
  };

  const json& rels = field(doc, "relations");
  if (!rels.is_object()) throw StructureError("'relations' must map agents to edge lists");
  for (const auto& [agent, edges] : rels.items()) {
    if (!sig.has_agent({agent})) throw StructureError("relation for unknown agent '" + agent + "'");
    for (const auto& [from, to] : edge_list(edges, agent)) model->add_edge(AgentId{agent}, event(from), event(to));
  }

  if (auto it = doc.find("pre"); it != doc.end()) {
    if (!it->is_object()) throw StructureError("'pre' must map events to formulas");
    for (const auto& [e, text] : it->items()) {
      if (!text.is_string()) throw StructureError("precondition of '" + e + "' must be a string");
      model->set_pre(event(e), parse(text.get<std::string>(), sig, actions));
    }
  }
  if (auto it = doc.find("post"); it != doc.end()) {
    if (!it->is_object()) throw StructureError("'post' must map events to assignments");
    for (const auto& [e, assignment] : it->items()) {
      if (!assignment.is_object()) throw StructureError("postcondition of '" + e + "' must be an object");
      PostMap post;
      for (const auto& [atom, value] : assignment.items()) {
        if (!value.is_boolean()) throw StructureError("assignment to '" + atom + "' must be true or false");
        post[parse_atom(atom, sig)] = value.get<bool>();
      }
      model->set_post(event(e), std::move(post));
    }
  }

  const json& point = field(doc, "point");
  if (!point.is_string()) throw StructureError("'point' must be an event name");
  const std::size_t p = event(point.get<std::string>());
  return PointedAction{std::move(model), p, "@" + name};
}

json action_to_json(const PointedAction& pa, const Signature& sig) {
  const ActionModel& a = *pa.model;
  json doc;
  doc["events"] = a.events();
  doc["relations"] = json::object();
  for (const auto& agent : sig.agents()) {
    json edges = json::array();
    const auto& succ = a.successors(agent);
    for (std::size_t e = 0; e < succ.size(); ++e) {
      for (std::size_t f : succ[e]) edges.push_back({a.event_name(e), a.event_name(f)});
    }
    doc["relations"][agent.name] = std::move(edges);
  }
  doc["pre"] = json::object();
  doc["post"] = json::object();
  for (std::size_t e = 0; e < a.event_count(); ++e) {
    doc["pre"][a.event_name(e)] = render(a.pre(e));
    json post = json::object();
    for (const auto& [atom, value] : a.post(e)) post[to_string(atom)] = value;
    doc["post"][a.event_name(e)] = std::move(post);
  }
  doc["point"] = a.event_name(pa.point);
  return doc;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw StructureError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

PointedModel load_model(const std::filesystem::path& path) { return model_from_json(read_json(path)); }

void save_model(const std::filesystem::path& path, const PointedModel& pm) { write_json(path, model_to_json(pm)); }

}  // namespace dlm
