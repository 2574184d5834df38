#include "dlm/formula.hpp"

#include <sstream>
#include <stdexcept>

#include "dlm/action.hpp"

namespace dlm {

struct Formula::Node {
  Kind kind = Kind::top;
  Atom atom;
  AgentId agent;
  PointedAction action;
  std::vector<Formula> kids;
};

bool PointedAction::operator==(const PointedAction& other) const {
  if (point != other.point || label != other.label) return false;
  if (model == other.model) return true;
  if (!model || !other.model) return false;
  return *model == *other.model;
}

const std::shared_ptr<const Formula::Node>& Formula::top_node() {
  static const std::shared_ptr<const Node> node = std::make_shared<Node>();
  return node;
}

Formula::Formula() : node_(top_node()) {}

Formula Formula::bottom() { return negate(top()); }

Formula Formula::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->atom = std::move(a);
  return Formula(std::move(n));
}

Formula Formula::prop(PropId p) { return atom(Atom::of_prop(std::move(p))); }

Formula Formula::obs(AgentId a, Literal l) { return atom(Atom::of_obs(std::move(a), std::move(l))); }

Formula Formula::literal(const Literal& l) {
  auto p = prop(l.prop);
  return l.positive ? p : negate(p);
}

Formula Formula::negate(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::negation;
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::conjunction;
  n->kids.push_back(std::move(l));
  n->kids.push_back(std::move(r));
  return Formula(std::move(n));
}

Formula Formula::believes(AgentId a, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::belief;
  n->agent = std::move(a);
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::box(PointedAction action, Formula f) {
  if (!action.model) throw std::invalid_argument("dynamic modality without an action model");
  auto n = std::make_shared<Node>();
  n->kind = Kind::dynamic;
  n->action = std::move(action);
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) { return negate(conj(negate(std::move(l)), negate(std::move(r)))); }

Formula Formula::implies(Formula l, Formula r) { return negate(conj(std::move(l), negate(std::move(r)))); }

Formula Formula::iff(Formula l, Formula r) { return conj(implies(l, r), implies(r, l)); }

Formula Formula::believable(AgentId a, Formula f) { return negate(believes(std::move(a), negate(std::move(f)))); }

Formula Formula::diamond(PointedAction action, Formula f) {
  return negate(box(std::move(action), negate(std::move(f))));
}

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  if (kind() != Kind::atom) throw std::logic_error("not an atom");
  return node_->atom;
}

const AgentId& Formula::agent() const {
  if (kind() != Kind::belief) throw std::logic_error("not a belief formula");
  return node_->agent;
}

const PointedAction& Formula::action() const {
  if (kind() != Kind::dynamic) throw std::logic_error("not a dynamic formula");
  return node_->action;
}

const Formula& Formula::operand() const {
  if (node_->kids.size() != 1) throw std::logic_error("formula has no single operand");
  return node_->kids[0];
}

const Formula& Formula::left() const {
  if (kind() != Kind::conjunction) throw std::logic_error("not a conjunction");
  return node_->kids[0];
}

const Formula& Formula::right() const {
  if (kind() != Kind::conjunction) throw std::logic_error("not a conjunction");
  return node_->kids[1];
}

bool Formula::is_bottom() const { return kind() == Kind::negation && operand().is_top(); }

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& k : node_->kids) n += k.size();
  return n;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::top:
      return true;
    case Kind::atom:
      return a.atom == b.atom;
    case Kind::belief:
      if (a.agent != b.agent) return false;
      break;
    case Kind::dynamic:
      if (!(a.action == b.action)) return false;
      break;
    default:
      break;
  }
  return a.kids == b.kids;
}

namespace {

bool is_negation(const Formula& f) { return f.kind() == Formula::Kind::negation; }

void render_to(std::ostream& os, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
      os << "true";
      return;
    case K::atom:
      os << to_string(f.atom());
      return;
    case K::conjunction: {
      const Formula& l = f.left();
      const Formula& r = f.right();
      // l <-> r is stored as ~(l & ~r) & ~(r & ~l)
      if (is_negation(l) && is_negation(r) && l.operand().kind() == K::conjunction &&
          r.operand().kind() == K::conjunction) {
        const Formula& a = l.operand();
        const Formula& b = r.operand();
        if (is_negation(a.right()) && is_negation(b.right()) && a.left() == b.right().operand() &&
            a.right().operand() == b.left()) {
          os << "(";
          render_to(os, a.left());
          os << " <-> ";
          render_to(os, b.left());
          os << ")";
          return;
        }
      }
      os << "(";
      render_to(os, l);
      os << " & ";
      render_to(os, r);
      os << ")";
      return;
    }
    case K::belief:
      os << "B[" << f.agent().name << "](";
      render_to(os, f.operand());
      os << ")";
      return;
    case K::dynamic:
      os << "[" << f.action().label << "](";
      render_to(os, f.operand());
      os << ")";
      return;
    case K::negation:
      break;
  }

  const Formula& g = f.operand();
  if (g.is_top()) {
    os << "false";
    return;
  }
  if (g.kind() == K::belief && is_negation(g.operand())) {
    os << "Bhat[" << g.agent().name << "](";
    render_to(os, g.operand().operand());
    os << ")";
    return;
  }
  if (g.kind() == K::dynamic && is_negation(g.operand())) {
    os << "<" << g.action().label << ">(";
    render_to(os, g.operand().operand());
    os << ")";
    return;
  }
  if (g.kind() == K::conjunction && is_negation(g.right())) {
    if (is_negation(g.left())) {
      os << "(";
      render_to(os, g.left().operand());
      os << " | ";
      render_to(os, g.right().operand());
      os << ")";
    } else {
      os << "(";
      render_to(os, g.left());
      os << " -> ";
      render_to(os, g.right().operand());
      os << ")";
    }
    return;
  }
  os << "~";
  render_to(os, g);
}

void collect_atoms(const Formula& f, std::set<Atom>& out, std::set<const ActionModel*>& seen) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
      return;
    case K::atom:
      out.insert(f.atom());
      return;
    case K::conjunction:
      collect_atoms(f.left(), out, seen);
      collect_atoms(f.right(), out, seen);
      return;
    case K::dynamic: {
      const ActionModel* a = f.action().model.get();
      if (seen.insert(a).second) {
        for (std::size_t e = 0; e < a->event_count(); ++e) collect_atoms(a->pre(e), out, seen);
      }
      collect_atoms(f.operand(), out, seen);
      return;
    }
    default:
      collect_atoms(f.operand(), out, seen);
  }
}

void collect_agents(const Formula& f, std::set<AgentId>& out, std::set<const ActionModel*>& seen) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
      return;
    case K::atom:
      if (f.atom().is_obs()) out.insert(f.atom().agent);
      return;
    case K::conjunction:
      collect_agents(f.left(), out, seen);
      collect_agents(f.right(), out, seen);
      return;
    case K::belief:
      out.insert(f.agent());
      collect_agents(f.operand(), out, seen);
      return;
    case K::dynamic: {
      const ActionModel* a = f.action().model.get();
      if (seen.insert(a).second) {
        for (const auto& [agent, succ] : a->relations()) out.insert(agent);
        for (std::size_t e = 0; e < a->event_count(); ++e) {
          collect_agents(a->pre(e), out, seen);
          for (const auto& [atom, value] : a->post(e)) {
            if (atom.is_obs()) out.insert(atom.agent);
          }
        }
      }
      collect_agents(f.operand(), out, seen);
      return;
    }
    default:
      collect_agents(f.operand(), out, seen);
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::ostringstream os;
  render_to(os, f);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  render_to(os, f);
  return os;
}

bool is_static(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
    case K::atom:
      return true;
    case K::dynamic:
      return false;
    case K::conjunction:
      return is_static(f.left()) && is_static(f.right());
    default:
      return is_static(f.operand());
  }
}

std::set<Atom> atoms_read(const Formula& f) {
  std::set<Atom> out;
  std::set<const ActionModel*> seen;
  collect_atoms(f, out, seen);
  return out;
}

std::set<AgentId> agents_used(const Formula& f) {
  std::set<AgentId> out;
  std::set<const ActionModel*> seen;
  collect_agents(f, out, seen);
  return out;
}

std::optional<std::vector<Literal>> as_literal_conjunction(const Formula& f) {
  using K = Formula::Kind;
  std::vector<Literal> out;
  std::vector<const Formula*> stack{&f};
  // Left-to-right traversal of the conjunction tree.
  std::vector<const Formula*> leaves;
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->kind() == K::conjunction) {
      stack.push_back(&g->right());
      stack.push_back(&g->left());
    } else {
      leaves.push_back(g);
    }
  }
  std::set<PropId> props;
  for (const Formula* g : leaves) {
    Literal l;
    if (g->kind() == K::atom && !g->atom().is_obs()) {
      l = {g->atom().prop, true};
    } else if (g->kind() == K::negation && g->operand().kind() == K::atom && !g->operand().atom().is_obs()) {
      l = {g->operand().atom().prop, false};
    } else {
      return std::nullopt;
    }
    if (!props.insert(l.prop).second) return std::nullopt;
    out.push_back(l);
  }
  return out;
}

}  // namespace dlm
