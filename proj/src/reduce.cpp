#include "dlm/reduce.hpp"

#include <algorithm>
#include <map>

#include "dlm/action.hpp"

namespace dlm {

namespace {

using K = Formula::Kind;

class Reducer {
 public:
  Formula translate(const Formula& f) {
    switch (f.kind()) {
      case K::top:
      case K::atom:
        return f;
      case K::negation:
        return Formula::negate(translate(f.operand()));
      case K::conjunction:
        return Formula::conj(translate(f.left()), translate(f.right()));
      case K::belief:
        return Formula::believes(f.agent(), translate(f.operand()));
      case K::dynamic: {
        const PointedAction& pa = f.action();
        return push(*pa.model, pa.point, translate(f.operand()));
      }
    }
    return f;
  }

 private:
  /// [A,e]body for a static body.
  Formula push(const ActionModel& a, std::size_t e, const Formula& body) {
    switch (body.kind()) {
      case K::top:
        return body;
      case K::atom: {
        const auto& post = a.post(e);
        auto assigned = post.find(body.atom());
        Formula value = body;
        if (assigned != post.end()) value = assigned->second ? Formula::top() : Formula::bottom();
        return Formula::implies(pre(a, e), value);
      }
      case K::negation:
        return Formula::implies(pre(a, e), Formula::negate(push(a, e, body.operand())));
      case K::conjunction:
        return Formula::conj(push(a, e, body.left()), push(a, e, body.right()));
      case K::belief: {
        std::vector<Formula> parts;
        const auto& succ = a.successors(body.agent());
        if (!succ.empty()) {
          std::vector<std::size_t> targets = succ[e];
          std::sort(targets.begin(), targets.end());
          for (std::size_t f : targets) parts.push_back(Formula::believes(body.agent(), push(a, f, body.operand())));
        }
        return Formula::implies(pre(a, e), Formula::conj_all(parts));
      }
      case K::dynamic:
        break;
    }
    // Unreachable: bodies are translated before being pushed.
    return push(a, e, translate(body));
  }

  const Formula& pre(const ActionModel& a, std::size_t e) {
    const auto key = std::make_pair(&a, e);
    auto it = pre_cache_.find(key);
    if (it == pre_cache_.end()) it = pre_cache_.emplace(key, translate(a.pre(e))).first;
    return it->second;
  }

  std::map<std::pair<const ActionModel*, std::size_t>, Formula> pre_cache_;
};

}  // namespace

Formula translate(const Formula& f) { return Reducer().translate(f); }

std::size_t dynamic_depth(const Formula& f) {
  switch (f.kind()) {
    case K::top:
    case K::atom:
      return 0;
    case K::conjunction:
      return std::max(dynamic_depth(f.left()), dynamic_depth(f.right()));
    case K::dynamic: {
      std::size_t inner = dynamic_depth(f.operand());
      const ActionModel& a = *f.action().model;
      for (std::size_t e = 0; e < a.event_count(); ++e) inner = std::max(inner, dynamic_depth(a.pre(e)));
      return inner + 1;
    }
    default:
      return dynamic_depth(f.operand());
  }
}

Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case K::top:
    case K::atom:
      return f;
    case K::negation: {
      Formula g = simplify(f.operand());
      if (g.kind() == K::negation) return g.operand();
      return Formula::negate(g);
    }
    case K::conjunction: {
      Formula l = simplify(f.left());
      Formula r = simplify(f.right());
      if (l.is_bottom() || r.is_bottom()) return Formula::bottom();
      if (l.is_top()) return r;
      if (r.is_top()) return l;
      return Formula::conj(l, r);
    }
    case K::belief: {
      Formula g = simplify(f.operand());
      if (g.is_top()) return g;
      return Formula::believes(f.agent(), g);
    }
    case K::dynamic: {
      Formula g = simplify(f.operand());
      if (g.is_top()) return g;
      return Formula::box(f.action(), g);
    }
  }
  return f;
}

}  // namespace dlm
