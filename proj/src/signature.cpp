#include "dlm/signature.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dlm {

std::string to_string(const Literal& l) { return l.positive ? l.prop.name : "~" + l.prop.name; }

std::string to_string(const Atom& a) {
  if (!a.is_obs()) return a.prop.name;
  return "obs(" + a.agent.name + "," + to_string(a.literal()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << to_string(a); }

namespace {

template <typename Id>
void check_names(const std::vector<Id>& ids, const char* what) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (id.name.empty()) throw std::invalid_argument(std::string("empty ") + what + " name");
    if (!seen.insert(id.name).second) {
      throw std::invalid_argument(std::string("duplicate ") + what + " '" + id.name + "'");
    }
  }
}

template <typename Id>
std::optional<std::size_t> find_index(const std::vector<Id>& ids, const Id& id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

Signature::Signature(std::vector<AgentId> agents, std::vector<PropId> props)
    : agents_(std::move(agents)), props_(std::move(props)) {
  check_names(agents_, "agent");
  check_names(props_, "prop");
}

Signature::Signature(std::initializer_list<const char*> agents, std::initializer_list<const char*> props) {
  for (const char* a : agents) agents_.push_back(AgentId{a});
  for (const char* p : props) props_.push_back(PropId{p});
  check_names(agents_, "agent");
  check_names(props_, "prop");
}

std::optional<std::size_t> Signature::agent_index(const AgentId& a) const { return find_index(agents_, a); }

std::optional<std::size_t> Signature::prop_index(const PropId& p) const { return find_index(props_, p); }

bool Signature::covers(const Atom& a) const {
  if (!has_prop(a.prop)) return false;
  return !a.is_obs() || has_agent(a.agent);
}

std::vector<Atom> Signature::all_atoms() const {
  std::vector<Atom> out;
  for (const auto& p : props_) out.push_back(Atom::of_prop(p));
  for (const auto& a : agents_) {
    for (const auto& p : props_) {
      out.push_back(Atom::of_obs(a, {p, true}));
      out.push_back(Atom::of_obs(a, {p, false}));
    }
  }
  return out;
}

}  // namespace dlm
