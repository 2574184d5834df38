#include "dlm/scenario.hpp"

#include <stdexcept>

#include "dlm/derived.hpp"
#include "dlm/parser.hpp"

namespace dlm {

Signature french_drop_signature() { return {{"a", "b"}, {"l", "r"}}; }

PointedModel french_drop_initial() {
  const Signature sig = french_drop_signature();
  Model m(sig, {"w", "v", "u"});
  m.set_atom(parse_atom("l", sig), "w");
  m.set_atom(parse_atom("obs(a,l)", sig), "w");
  m.set_atom(parse_atom("obs(a,~r)", sig), "w");
  m.set_atom(parse_atom("r", sig), "v");
  m.set_atom(parse_atom("obs(a,r)", sig), "v");
  m.set_atom(parse_atom("obs(a,~l)", sig), "v");
  m.set_atom(parse_atom("obs(a,~r)", sig), "u");
  m.set_atom(parse_atom("obs(a,~l)", sig), "u");
  for (std::size_t w = 0; w < 3; ++w) {
    m.add_edge(AgentId{"a"}, w, w);
    for (std::size_t v = 0; v < 3; ++v) m.add_edge(AgentId{"b"}, w, v);
  }
  return {std::move(m), 0};
}

PointedAction french_drop_fake_pass() {
  return expand(ActionType::show_minus({"a"}, {{{"r"}, true}, {{"l"}, false}}), french_drop_signature());
}

PointedAction french_drop_reveal() {
  return expand(ActionType::show_plus({"a"}, {{{"l"}, true}, {{"r"}, false}}), french_drop_signature());
}

Formula french_drop_posterior() {
  return parse(
      "l & obs(a,l) & obs(a,~r) & ~obs(a,r) & ~obs(b,r)"
      " & <show-(a, r & ~l)>(obs(a,l) & obs(a,~r) & obs(b,r) & obs(b,~l)"
      " & <show+(a, l & ~r)>(obs(b,l) & obs(b,~r)))",
      french_drop_signature());
}

bool ScenarioReport::ok() const { return first_failure() == nullptr; }

const ScenarioCheck* ScenarioReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.holds) return &c;
  }
  return nullptr;
}

ScenarioReport run_french_drop() {
  const Signature sig = french_drop_signature();
  ScenarioReport report;
  report.stages.push_back(french_drop_initial());

  auto step = [&](const PointedAction& pa) {
    auto next = apply(report.stages.back(), pa);
    if (!next) throw std::runtime_error(pa.label + " is not executable at " + report.stages.back().point_name());
    report.stages.push_back(std::move(*next));
  };
  step(french_drop_fake_pass());
  step(french_drop_reveal());

  const char* names[] = {"opening", "after fake pass", "after reveal"};
  auto check = [&](std::size_t stage, const Formula& f) {
    report.checks.push_back({names[stage], render(f), satisfies(report.stages[stage], f)});
  };
  const AgentId b{"b"};
  const Literal l{{"l"}, true};
  const Literal r{{"r"}, true};

  check(0, french_drop_posterior());
  check(1, epistemic_obs(b, l.complement()));
  check(1, epistemic_obs(b, r));
  check(1, surprise(SurpriseKind::strong_mismatch, b, l.prop));
  check(2, epistemic_obs(b, l));
  check(2, epistemic_obs(b, r.complement()));
  return report;
}

Signature glance_signature() { return {{"a", "b"}, {"p"}}; }

PointedModel glance_model() {
  const Signature sig = glance_signature();
  Model m(sig, {"w", "v"});
  m.set_atom(parse_atom("p", sig), "w");
  m.set_atom(parse_atom("obs(a,p)", sig), "w");
  m.set_atom(parse_atom("obs(a,~p)", sig), "v");
  m.set_atom(parse_atom("obs(b,~p)", sig), "v");
  for (std::size_t w = 0; w < 2; ++w) {
    m.add_edge(AgentId{"a"}, w, w);
    for (std::size_t v = 0; v < 2; ++v) m.add_edge(AgentId{"b"}, w, v);
  }
  return {std::move(m), 0};
}

}  // namespace dlm
