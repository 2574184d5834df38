// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dlm/derived.hpp"
#include "dlm/explorer.hpp"
#include "dlm/io.hpp"
#include "dlm/parser.hpp"
#include "dlm/reduce.hpp"
#include "dlm/scenario.hpp"
#include "dlm/update.hpp"
#include "support.hpp"

using namespace dlm;

namespace {

/// Collects failure reasons for one criterion.
struct Verdict {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

bool is_valid(const ValidityResult& r) { return std::holds_alternative<ValidWithinBounds>(r); }

std::string show_counter(const ValidityResult& r) {
  if (const auto* c = std::get_if<Countermodel>(&r)) return model_to_json(c->model).dump();
  return "";
}

std::set<std::string> atom_names(const Model& m, std::size_t w) {
  std::set<std::string> out;
  for (const Atom& a : m.atoms_at(w)) out.insert(to_string(a));
  return out;
}

std::set<std::pair<std::string, std::string>> named_edges(const Model& m, const AgentId& agent) {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    const WorldSet& s = m.successors(agent, w);
    for (auto v = s.find_first(); v != WorldSet::npos; v = s.find_next(v)) out.insert({m.world_name(w), m.world_name(v)});
  }
  return out;
}

/// Every action-type instance over a single prop p: both polarities, all
/// four types, every agent as actor.
std::vector<PointedAction> action_instances(const Signature& sig) {
  std::vector<PointedAction> out;
  const Formula p = Formula::prop("p");
  for (const AgentId& a : sig.agents()) {
    for (const Formula& content : {p, Formula::negate(p)}) {
      out.push_back(expand(ActionType::tell_plus(a, content), sig));
      out.push_back(expand(ActionType::tell_minus(a, content), sig));
    }
    for (bool positive : {true, false}) {
      out.push_back(expand(ActionType::show_plus(a, {{{"p"}, positive}}), sig));
      out.push_back(expand(ActionType::show_minus(a, {{{"p"}, positive}}), sig));
    }
  }
  return out;
}

std::set<Atom> precondition_atoms(const ActionModel& a) {
  std::set<Atom> out;
  for (std::size_t e = 0; e < a.event_count(); ++e) {
    const auto atoms = atoms_read(a.pre(e));
    out.insert(atoms.begin(), atoms.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

Verdict coin_trick() {
  Verdict v;
  const ScenarioReport report = run_french_drop();
  v.expect(report.ok(), "scenario assertion failed: " + (report.ok() ? "" : report.first_failure()->formula));
  v.expect(report.stages.size() == 3, "three stages");
  if (report.stages.size() == 3) {
    v.expect(report.stages[0].model.world_count() == 3, "opening has 3 worlds");
    v.expect(report.stages[1].model.world_count() == 4, "intermediate product has 4 worlds");
    v.expect(report.stages[2].model.world_count() == 2, "final product has 2 worlds");
    v.expect(!report.stages[1].model.world_index("(v,e)"), "(v,e) absent");
    v.expect(!report.stages[1].model.world_index("(u,e)"), "(u,e) absent");
  }
  v.expect(satisfies(french_drop_initial(), french_drop_posterior()), "posterior formula at the opening");
#ifdef DLM_CLI_PATH
  const std::string cmd = std::string("\"") + DLM_CLI_PATH + "\" scenario french_drop > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  v.expect(status == 0, "`dlm scenario french_drop` exit status " + std::to_string(status));
#endif
  return v;
}

Verdict glance() {
  Verdict v;
  const Signature sig = glance_signature();
  const PointedModel pm = glance_model();
  v.expect(satisfies(pm, parse("obs(a,p) & ~obs(b,~p) & [show-(a,~p)](p & obs(b,~p) & B[b] obs(a,~p))", sig)),
           "formula true at w");
  const auto out = apply(pm, parse_action("show-(a,~p)", sig));
  v.expect(out.has_value(), "action executable at w");
  if (!out) return v;
  const Model& m = out->model;
  v.expect(m.worlds() == std::vector<std::string>{"(w,e)", "(w,f)", "(v,f)"}, "worlds (w,e),(w,f),(v,f)");
  v.expect(out->point_name() == "(w,e)", "point (w,e)");
  if (m.world_count() != 3) return v;
  v.expect(atom_names(m, 0) == std::set<std::string>{"p", "obs(a,p)", "obs(b,~p)"}, "(w,e) valuation");
  v.expect(atom_names(m, 1) == std::set<std::string>{"obs(a,~p)", "obs(b,~p)"}, "(w,f) valuation");
  v.expect(atom_names(m, 2) == std::set<std::string>{"obs(a,~p)", "obs(b,~p)"}, "(v,f) valuation");
  using E = std::set<std::pair<std::string, std::string>>;
  v.expect(named_edges(m, {"a"}) == E{{"(w,e)", "(w,e)"}, {"(w,f)", "(w,f)"}, {"(w,f)", "(w,e)"}, {"(v,f)", "(v,f)"}},
           "a-edges");
  v.expect(named_edges(m, {"b"}) == E{{"(w,e)", "(w,f)"},
                                      {"(w,e)", "(v,f)"},
                                      {"(w,f)", "(w,f)"},
                                      {"(w,f)", "(v,f)"},
                                      {"(v,f)", "(w,f)"},
                                      {"(v,f)", "(v,f)"}},
           "b-edges");
  return v;
}

Verdict axiom_table() {
  Verdict v;
  const Signature sig{{"a", "b"}, {"p", "q"}};
  const Bounds bounds = make_bounds(3, sig, FrameClass::observational);
  const std::vector<std::string> metas = {"p", "q", "~p", "B[a] p"};
  std::vector<std::string> instances;
  for (const auto& phi : metas) {
    for (const auto& psi : metas) {
      const std::string f = "(" + phi + ")";
      const std::string g = "(" + psi + ")";
      instances.push_back(f + " -> (" + g + " -> " + f + ")");
      instances.push_back("(~" + f + " -> ~" + g + ") -> (" + g + " -> " + f + ")");
      instances.push_back("(" + f + " & " + g + ") -> " + f);
      instances.push_back(f + " | ~" + f);
      for (const char* a : {"a", "b"}) {
        const std::string B = std::string("B[") + a + "]";
        instances.push_back(B + "(" + f + " -> " + g + ") -> (" + B + f + " -> " + B + g + ")");
        // Necessitation of a tautology, then modus ponens with K.
        instances.push_back(B + "(" + f + " -> (" + g + " -> " + f + "))");
      }
    }
    for (const char* a : {"a", "b"}) {
      const std::string B = std::string("B[") + a + "]";
      const std::string Bh = std::string("Bhat[") + a + "]";
      const std::string f = "(" + phi + ")";
      instances.push_back(B + f + " -> " + B + B + f);
      instances.push_back("~" + B + f + " -> " + B + "~" + B + f);
      instances.push_back(B + f + " -> " + Bh + f);
    }
  }
  for (const char* a : {"a", "b"}) {
    for (const char* p : {"p", "q"}) {
      instances.push_back(std::string("obs(") + a + "," + p + ") -> ~obs(" + a + ",~" + p + ")");
    }
  }
  for (const auto& text : instances) {
    const ValidityResult r = check_validity(parse(text, sig), bounds);
    v.expect(is_valid(r), text + " countermodel " + show_counter(r));
  }
  v.note(std::to_string(instances.size()) + " instances");
  return v;
}

Verdict reduction() {
  Verdict v;
  const Signature sig{{"a", "b"}, {"p", "q"}};
  const Bounds bounds = make_bounds(2, sig, FrameClass::observational);
  testing::FormulaGen gen(sig, 20240601);
  std::size_t checked = 0;
  std::set<std::string> kinds;
  while (checked < 200) {
    const Formula f = gen.formula(3, 2);
    if (is_static(f)) continue;
    const std::size_t depth = dynamic_depth(f);
    if (depth > 2) continue;
    const std::string text = render(f);
    for (const char* k : {"tell+", "tell-", "show+", "show-"}) {
      if (text.find(k) != std::string::npos) kinds.insert(k);
    }
    const Formula t = translate(f);
    v.expect(is_static(t), "translation not static: " + text);
    v.expect(translate(t) == t, "translation not idempotent: " + text);
    const ValidityResult r = check_validity(Formula::iff(f, t), bounds);
    v.expect(is_valid(r), "translation changes truth: " + text + " at " + show_counter(r));
    ++checked;
  }
  v.expect(kinds.size() == 4, "all four action types exercised");
  v.note(std::to_string(checked) + " dynamic formulas");
  return v;
}

Verdict frame_preservation() {
  Verdict v;
  const Signature sig{{"a", "b"}, {"p"}};
  const auto actions = action_instances(sig);
  std::size_t products = 0;
  std::vector<std::string> preserved;
  for (const auto& pa : actions) {
    const std::size_t failures_before = v.failures.size();
    // The product frame depends only on which worlds satisfy each
    // precondition, so the valuation ranges over the atoms those read.
    Bounds b = make_bounds(3, sig, FrameClass::euclidean_transitive);
    b.atoms = precondition_atoms(*pa.model);
    for_each_model(b, [&](const Model& m) {
      const auto [before, after] = preservation_report(m, *pa.model);
      ++products;
      if (!after.all_euclidean() || !after.all_transitive()) {
        const bool strict = validate_action(*pa.model, sig, ActionStrictness::strict).valid;
        v.expect(false, pa.label + (strict ? "" : " (its own relations are not Euclidean)") +
                            " breaks Euclidean/transitive on " + model_to_json({m, 0}).dump());
        return false;
      }
      return true;
    });
    if (v.failures.size() == failures_before) preserved.push_back(pa.label);
  }
  v.note(std::to_string(products) + " products (a)");
  std::string kept;
  for (const auto& label : preserved) kept += (kept.empty() ? "" : ", ") + label;
  v.note("preserved by " + kept);

  const auto witness = find_seriality_breaker(make_bounds(3, sig, FrameClass::observational), actions);
  v.expect(witness.has_value(), "no seriality-breaking witness");
  if (witness) {
    const auto [before, after] = preservation_report(witness->first.model, *witness->second.model);
    v.expect(before.all_serial() && !after.all_serial(), "witness really breaks seriality");
    v.note("witness " + witness->second.label + " at " + model_to_json(witness->first).dump());
  }
  return v;
}

Verdict simulation_dissimulation() {
  Verdict v;
  const Signature sig{{"a", "b"}, {"p"}};
  const Bounds bounds = make_bounds(3, sig, FrameClass::observational);
  const std::vector<std::pair<std::string, std::string>> claims = {
      {"verbal case", "<tell-(a,~p)>B[b]~p -> ~<tell+(a,p)>(Bhat[b] true & B[b]~p)"},
      {"visual case", "<show-(a,~p)>obs(b,~p) -> ~<show+(a,p)>obs(b,~p)"},
      {"simulation with b believing and observing ~p implies dissimulation",
       "(Sim(a,b,p) & B[b]~p & obs(b,~p)) -> Dis(a,b,p)"},
  };
  for (const auto& [name, text] : claims) {
    const ValidityResult r = check_validity(parse(text, sig), bounds);
    v.expect(is_valid(r), name + ": " + text + " has countermodel " + show_counter(r));
    if (is_valid(r)) v.note(name + ": valid within bounds");
  }
  return v;
}

Verdict observation_principles() {
  Verdict v;
  const Signature sig{{"a", "b"}, {"p"}};
  const Bounds bounds = make_bounds(3, sig, FrameClass::observational);
  for (const char* text : {"(obs(a,p) & B[a] obs(a,p)) -> [show+(a,p)](obs(b,p) & B[b] obs(b,p))",
                           "(obs(a,~p) & B[a] obs(a,~p)) -> [show-(a,p)](obs(b,p) & B[b] obs(b,p))"}) {
    const ValidityResult r = check_validity(parse(text, sig), bounds);
    v.expect(is_valid(r), std::string(text) + " countermodel " + show_counter(r));
  }
  for (const char* text : {"obs(a,p) -> B[a] obs(a,p)", "obs(a,~p) -> B[a] obs(a,~p)", "B[a] obs(a,p) -> obs(a,p)",
                           "B[a] obs(a,~p) -> obs(a,~p)"}) {
    const Formula f = parse(text, sig);
    v.expect(find_witness(f, bounds).has_value(), std::string(text) + " has no witness");
    v.expect(!is_valid(check_validity(f, bounds)), std::string(text) + " has no countermodel");
  }
  return v;
}

Verdict properties() {
  Verdict v;
  const Signature sig{{"a", "b"}, {"p"}};
  const auto actions = action_instances(sig);

  // Observation consistency of every product.
  std::size_t products = 0;
  for_each_model(make_bounds(2, sig, FrameClass::observational), [&](const Model& m) {
    for (const auto& pa : actions) {
      const Model out = product(m, *pa.model);
      ++products;
      if (!validate(out, ModelStrictness::relational).obs_consistent) {
        v.expect(false, pa.label + " breaks observation consistency");
        return false;
      }
    }
    return true;
  });
  v.note(std::to_string(products) + " products");

  // Parse/render round trip.
  const Signature sig2{{"a", "b"}, {"p", "q"}};
  testing::FormulaGen gen(sig2, 99);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula(4, 2);
    v.expect(parse(render(f), sig2) == f, "parse(render(f)) != f for " + render(f));
  }

  // Model and action file round trips.
  std::size_t files = 0;
  enumerate(make_bounds(2, sig, FrameClass::all), [&](const PointedModel& pm) {
    const PointedModel back = model_from_json(model_to_json(pm));
    ++files;
    if (!(back.model == pm.model) || back.point != pm.point) {
      v.expect(false, "model file round trip");
      return false;
    }
    return true;
  });
  for (const auto& pa : actions) {
    const PointedAction back = action_from_json(action_to_json(pa, sig), sig, "x");
    v.expect(*back.model == *pa.model && back.point == pa.point, "action file round trip " + pa.label);
  }
  v.note(std::to_string(files) + " model files");

  // Duality of validity and witness search.
  const Bounds bounds = make_bounds(2, sig2, FrameClass::observational);
  testing::FormulaGen sgen(sig2, 4242);
  for (int i = 0; i < 100; ++i) {
    const Formula f = sgen.formula(3, 0);
    const ValidityResult r = check_validity(f, bounds);
    const auto w = find_witness(Formula::negate(f), bounds);
    bool ok = is_valid(r) == !w.has_value();
    if (ok && w) {
      const PointedModel& c = std::get<Countermodel>(r).model;
      ok = c.model == w->model && c.point == w->point;
    }
    v.expect(ok, "duality fails for " + render(f));
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 coin trick end-to-end", coin_trick},
      {"2 glance model update", glance},
      {"3 axiom table sound on observational models", axiom_table},
      {"4 reduction preserves truth", reduction},
      {"5 frame preservation and seriality loss", frame_preservation},
      {"6 simulation and dissimulation", simulation_dissimulation},
      {"7 observation and belief principles", observation_principles},
      {"8 property suites", properties},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = v.failures.empty();
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << secs << " s)";
    std::cout << line.str() << std::endl;
    for (const auto& n : v.notes) std::cout << "      " << n << '\n';
    for (const auto& f : v.failures) std::cout << "      - " << f << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
