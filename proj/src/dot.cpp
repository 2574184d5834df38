#include "dlm/dot.hpp"

#include <map>
#include <sstream>

#include "dlm/action.hpp"

namespace dlm {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string to_dot(const PointedModel& pm, const std::string& graph_name) {
  const Model& m = pm.model;
  std::ostringstream os;
  os << "digraph " << quote(graph_name) << " {\n";
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    std::vector<std::string> atoms;
    for (const Atom& a : m.atoms_at(w)) atoms.push_back(to_string(a));
    os << "  " << quote(m.world_name(w)) << " [shape=" << (w == pm.point ? "doublecircle" : "circle")
       << ", label=" << quote(m.world_name(w) + "\n{" + join(atoms, ", ") + "}") << "];\n";
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> edges;
  for (const auto& agent : m.signature().agents()) {
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      const WorldSet& succ = m.successors(agent, w);
      for (auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next(v)) {
        edges[{w, v}].push_back(agent.name);
      }
    }
  }
  for (const auto& [edge, agents] : edges) {
    os << "  " << quote(m.world_name(edge.first)) << " -> " << quote(m.world_name(edge.second))
       << " [label=" << quote(join(agents, ",")) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const PointedAction& pa, const std::string& graph_name) {
  const ActionModel& a = *pa.model;
  std::ostringstream os;
  os << "digraph " << quote(graph_name) << " {\n";
  for (std::size_t e = 0; e < a.event_count(); ++e) {
    std::vector<std::string> post;
    for (const auto& [atom, value] : a.post(e)) post.push_back(to_string(atom) + ":=" + (value ? "true" : "false"));
    std::string label = a.event_name(e) + "\npre: " + render(a.pre(e));
    if (!post.empty()) label += "\npost: " + join(post, ", ");
    os << "  " << quote(a.event_name(e)) << " [shape=box" << (e == pa.point ? ", peripheries=2" : "")
       << ", label=" << quote(label) << "];\n";
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> edges;
  for (const auto& [agent, succ] : a.relations()) {
    for (std::size_t e = 0; e < succ.size(); ++e) {
      for (std::size_t f : succ[e]) edges[{e, f}].push_back(agent.name);
    }
  }
  for (const auto& [edge, agents] : edges) {
    os << "  " << quote(a.event_name(edge.first)) << " -> " << quote(a.event_name(edge.second))
       << " [label=" << quote(join(agents, ",")) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dlm
