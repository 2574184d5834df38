// Command-line front end. Exit codes: 0 true/success, 1 false/countermodel,
// 2 parse error, 3 validation error, 4 action not executable,
// 5 enumeration budget exceeded, 64 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dlm/derived.hpp"
#include "dlm/dot.hpp"
#include "dlm/explorer.hpp"
#include "dlm/io.hpp"
#include "dlm/parser.hpp"
#include "dlm/reduce.hpp"
#include "dlm/scenario.hpp"
#include "dlm/update.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dlm;

namespace {

enum Exit : int {
  kTrue = 0,
  kFalse = 1,
  kParse = 2,
  kInvalid = 3,
  kNotExecutable = 4,
  kBudget = 5,
  kUsage = 64,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignatureOptions {
  std::string model_path;
  std::vector<std::string> agents;
  std::vector<std::string> props;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model_path, "Take agents and props from a model file");
    cmd->add_option("--agents", agents, "Agent names")->delimiter(',');
    cmd->add_option("--props", props, "Proposition names")->delimiter(',');
  }

  [[nodiscard]] Signature resolve() const {
    if (!model_path.empty()) return load_model(model_path).model.signature();
    if (agents.empty() && props.empty()) throw UsageError("give --model or --agents/--props");
    std::vector<AgentId> as;
    std::vector<PropId> ps;
    for (const auto& a : agents) as.push_back({a});
    for (const auto& p : props) ps.push_back({p});
    try {
      return {as, ps};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

/// --actions name=file.json, loaded in order so later files may use earlier names.
ActionRegistry load_actions(const std::vector<std::string>& specs, const Signature& sig) {
  ActionRegistry reg;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--actions expects name=file, got '" + spec + "'");
    const std::string name = spec.substr(0, eq);
    PointedAction pa = action_from_json(read_json(spec.substr(eq + 1)), sig, name, reg);
    validate_action(*pa.model, sig, ActionStrictness::lenient);
    reg[name] = std::move(pa);
  }
  return reg;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void require_valid(const Model& m, ModelStrictness strictness) {
  const FrameReport report = validate(m, strictness);
  if (!report.valid) throw StructureError("model rejected: " + describe(report));
}

void print_worlds(const Model& m, std::size_t indent) {
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    std::cout << std::string(indent, ' ') << m.world_name(w) << " {";
    const auto atoms = m.atoms_at(w);
    for (std::size_t i = 0; i < atoms.size(); ++i) std::cout << (i ? ", " : "") << to_string(atoms[i]);
    std::cout << "}";
    for (const auto& agent : m.signature().agents()) {
      const WorldSet& succ = m.successors(agent, w);
      std::cout << "  " << agent.name << "->";
      for (auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next(v)) {
        std::cout << (v == succ.find_first() ? "" : ",") << m.world_name(v);
      }
    }
    std::cout << '\n';
  }
}

// ---------------------------------------------------------------- parse

struct ParseCmd {
  SignatureOptions sig;
  std::string formula;

  int run() const {
    const Formula f = parse(formula, sig.resolve());
    std::cout << render(f) << '\n';
    std::cout << "static: " << (is_static(f) ? "yes" : "no") << ", dynamic depth: " << dynamic_depth(f)
              << ", size: " << f.size() << '\n';
    return kTrue;
  }
};

// ---------------------------------------------------------------- check

struct CheckCmd {
  std::string model_path;
  std::string formula;
  std::vector<std::string> actions;
  bool trace = false;
  bool strict = false;
  std::string format = "text";

  int run() const {
    const PointedModel pm = load_model(model_path);
    require_valid(pm.model, strict ? ModelStrictness::observational : ModelStrictness::relational);
    const Signature& sig = pm.model.signature();
    const Formula f = parse(formula, sig, load_actions(actions, sig));
    const bool value = satisfies(pm, f);

    if (format == "json-lines") {
      if (trace) {
        for (const auto& line : dlm::trace(pm, f)) {
          json j{{"event", "trace"}, {"depth", line.depth}, {"formula", line.formula}, {"value", line.value}};
          if (!line.note.empty()) j["note"] = line.note;
          if (line.product) j["product"] = model_to_json(*line.product);
          std::cout << j.dump() << '\n';
        }
      }
      std::cout << json{{"event", "result"}, {"point", pm.point_name()}, {"formula", render(f)}, {"value", value}}.dump()
                << '\n';
    } else {
      if (trace) {
        for (const auto& line : dlm::trace(pm, f)) {
          std::cout << std::string(2 * line.depth, ' ') << (line.value ? "T " : "F ") << line.formula;
          if (!line.note.empty()) std::cout << "   [" << line.note << "]";
          std::cout << '\n';
          if (line.product) print_worlds(line.product->model, 2 * line.depth + 4);
        }
      }
      std::cout << (value ? "true" : "false") << '\n';
    }
    return value ? kTrue : kFalse;
  }
};

// ---------------------------------------------------------------- update

struct UpdateCmd {
  std::string model_path;
  std::string action;
  std::string out_path;
  std::string dot_path;
  std::vector<std::string> actions;
  bool force = false;

  int run() const {
    const PointedModel pm = load_model(model_path);
    require_valid(pm.model, ModelStrictness::relational);
    const Signature& sig = pm.model.signature();
    const ActionRegistry reg = load_actions(actions, sig);

    PointedAction pa;
    if (fs::path(action).extension() == ".json" && fs::exists(action)) {
      pa = action_from_json(read_json(action), sig, fs::path(action).stem().string(), reg);
    } else {
      pa = parse_action(action, sig, reg);
    }
    validate_action(*pa.model, sig, ActionStrictness::lenient);

    PointedModel result;
    if (auto applied = apply(pm, pa)) {
      result = std::move(*applied);
    } else {
      if (!force) {
        std::cerr << "dlm: " << pa.label << " is not executable at " << pm.point_name() << '\n';
        return kNotExecutable;
      }
      Model prod = product(pm.model, *pa.model);
      if (prod.empty()) {
        std::cerr << "dlm: the product of " << pa.label << " has no worlds\n";
        return kNotExecutable;
      }
      std::cerr << "dlm: warning: " << pa.label << " is not executable at " << pm.point_name()
                << "; pointing the product at " << prod.world_name(0) << '\n';
      result = PointedModel{std::move(prod), 0};
    }

    if (out_path.empty()) {
      std::cout << model_to_json(result).dump(2) << '\n';
    } else {
      save_model(out_path, result);
    }
    if (!dot_path.empty()) write_text(dot_path, to_dot(result, "update"));
    std::cerr << "worlds: " << pm.model.world_count() << " -> " << result.model.world_count() << '\n';
    return kTrue;
  }
};

// ---------------------------------------------------------------- translate

struct TranslateCmd {
  SignatureOptions sig;
  std::string formula;
  bool simplified = false;
  bool check_equiv = false;
  std::size_t max_worlds = 2;
  std::string frame_class = "observational";

  int run() const {
    const Signature s = sig.resolve();
    const Formula f = parse(formula, s);
    Formula t = translate(f);
    if (simplified) t = simplify(t);
    std::cout << render(t) << '\n';
    if (!check_equiv) return kTrue;

    const ValidityResult r =
        check_validity(Formula::iff(f, t), make_bounds(max_worlds, s, frame_class_from_string(frame_class)));
    if (const auto* c = std::get_if<Countermodel>(&r)) {
      std::cout << "NOT equivalent; countermodel:\n" << model_to_json(c->model).dump(2) << '\n';
      return kFalse;
    }
    std::cout << "equivalent on all pointed models up to " << max_worlds << " worlds\n";
    return kTrue;
  }
};

// ---------------------------------------------------------------- verify

struct VerifyCmd {
  std::string formula;
  std::size_t max_worlds = 2;
  std::vector<std::string> agents;
  std::vector<std::string> props;
  std::string frame_class = "observational";
  std::optional<std::size_t> budget;
  bool witness = false;
  std::string out_path;

  int run() const {
    SignatureOptions so;
    so.agents = agents;
    so.props = props;
    const Signature sig = so.resolve();
    const Formula f = parse(formula, sig);
    Bounds bounds = make_bounds(max_worlds, sig, frame_class_from_string(frame_class));
    if (budget) bounds.budget = *budget;

    std::optional<PointedModel> found;
    if (witness) {
      found = find_witness(f, bounds);
      if (!found) {
        std::cout << "unsatisfiable within bounds\n";
        return kFalse;
      }
      std::cout << "witness:\n";
    } else {
      const ValidityResult r = check_validity(f, bounds);
      if (std::holds_alternative<ValidWithinBounds>(r)) {
        std::cout << "valid within bounds (" << count_pointed_models(bounds) << " pointed models over "
                  << max_worlds << " worlds max)\n";
        return kTrue;
      }
      found = std::get<Countermodel>(r).model;
      std::cout << "countermodel:\n";
    }
    const json doc = model_to_json(*found);
    std::cout << doc.dump(2) << '\n';
    if (!out_path.empty()) write_json(out_path, doc);
    return witness ? kTrue : kFalse;
  }
};

// ---------------------------------------------------------------- scenario

struct ScenarioCmd {
  std::string name;
  std::string dot_dir;

  int run() const {
    if (name != "french_drop") throw UsageError("unknown scenario '" + name + "' (available: french_drop)");
    const ScenarioReport report = run_french_drop();
    std::cout << "French Drop\n";
    const char* stage_names[] = {"opening", "after fake pass", "after reveal"};
    for (std::size_t i = 0; i < report.stages.size(); ++i) {
      std::cout << "  " << stage_names[i] << ": " << report.stages[i].model.world_count() << " worlds, point "
                << report.stages[i].point_name() << '\n';
    }
    std::cout << "  worlds: " << report.stages[0].model.world_count() << " -> "
              << report.stages[1].model.world_count() << " -> " << report.stages[2].model.world_count() << '\n';
    for (const auto& c : report.checks) {
      std::cout << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.stage << ": " << c.formula << '\n';
    }
    if (!dot_dir.empty()) {
      const char* files[] = {"opening.dot", "fake_pass.dot", "reveal.dot"};
      for (std::size_t i = 0; i < report.stages.size(); ++i) {
        write_text(fs::path(dot_dir) / files[i], to_dot(report.stages[i], files[i]));
      }
    }
    if (const auto* bad = report.first_failure()) {
      std::cerr << "dlm: assertion failed at " << bad->stage << ": " << bad->formula << '\n';
      return kFalse;
    }
    return kTrue;
  }
};

// ---------------------------------------------------------------- export

struct ExportCmd {
  std::string input;
  std::string out_path;
  SignatureOptions sig;
  bool as_action = false;

  int run() const {
    std::string dot;
    if (as_action) {
      const Signature s = sig.resolve();
      const PointedAction pa = action_from_json(read_json(input), s, fs::path(input).stem().string());
      validate_action(*pa.model, s, ActionStrictness::lenient);
      dot = to_dot(pa, fs::path(input).stem().string());
    } else {
      const PointedModel pm = load_model(input);
      require_valid(pm.model, ModelStrictness::relational);
      dot = to_dot(pm, fs::path(input).stem().string());
    }
    if (out_path.empty()) {
      std::cout << dot;
    } else {
      write_text(out_path, dot);
    }
    return kTrue;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for the dynamic logic of misdirection"};
  app.require_subcommand(1);

  ParseCmd parse_cmd;
  auto* p = app.add_subcommand("parse", "Parse a formula and print its canonical form");
  p->add_option("formula", parse_cmd.formula)->required();
  parse_cmd.sig.attach(p);

  CheckCmd check_cmd;
  auto* c = app.add_subcommand("check", "Evaluate a formula at the point of a model");
  c->add_option("model", check_cmd.model_path)->required();
  c->add_option("formula", check_cmd.formula)->required();
  c->add_option("--actions", check_cmd.actions, "Named action models, name=file.json");
  c->add_flag("--trace", check_cmd.trace, "Print every subformula with its value");
  c->add_flag("--strict", check_cmd.strict, "Require an observational model");
  c->add_option("--format", check_cmd.format)->check(CLI::IsMember({"text", "json-lines"}));

  UpdateCmd update_cmd;
  auto* u = app.add_subcommand("update", "Apply a pointed action and write the product model");
  u->add_option("model", update_cmd.model_path)->required();
  u->add_option("action", update_cmd.action, "Action expression or action file")->required();
  u->add_option("-o,--out", update_cmd.out_path, "Output model file (stdout if omitted)");
  u->add_option("--dot", update_cmd.dot_path, "Also write a Graphviz file");
  u->add_option("--actions", update_cmd.actions, "Named action models, name=file.json");
  u->add_flag("--force-product", update_cmd.force, "Write the product even if the point is eliminated");

  TranslateCmd translate_cmd;
  auto* t = app.add_subcommand("translate", "Eliminate dynamic modalities");
  t->add_option("formula", translate_cmd.formula)->required();
  translate_cmd.sig.attach(t);
  t->add_flag("--simplify", translate_cmd.simplified, "Fold constants in the result");
  t->add_flag("--check-equiv", translate_cmd.check_equiv, "Cross-check against the direct semantics");
  t->add_option("--max-worlds", translate_cmd.max_worlds);
  t->add_option("--frame-class", translate_cmd.frame_class);

  VerifyCmd verify_cmd;
  auto* v = app.add_subcommand("verify", "Bounded validity check or witness search");
  v->add_option("formula", verify_cmd.formula)->required();
  v->add_option("--max-worlds", verify_cmd.max_worlds);
  v->add_option("--agents", verify_cmd.agents)->delimiter(',')->required();
  v->add_option("--props", verify_cmd.props)->delimiter(',')->required();
  v->add_option("--frame-class", verify_cmd.frame_class)
      ->check(CLI::IsMember({"observational", "euclidean_transitive", "all"}));
  v->add_option("--budget", verify_cmd.budget, "Maximal pointed models (default $DLM_BUDGET or 2e8)");
  v->add_flag("--witness", verify_cmd.witness, "Search for a satisfying model instead");
  v->add_option("-o,--out", verify_cmd.out_path, "Write the model found to a file");

  ScenarioCmd scenario_cmd;
  auto* s = app.add_subcommand("scenario", "Run a built-in scenario");
  s->add_option("name", scenario_cmd.name)->required();
  s->add_option("--dot", scenario_cmd.dot_dir, "Directory for one Graphviz file per stage");

  ExportCmd export_cmd;
  auto* e = app.add_subcommand("export", "Graphviz export of a model or action file");
  e->add_option("file", export_cmd.input)->required();
  e->add_option("-o,--out", export_cmd.out_path);
  e->add_flag("--action", export_cmd.as_action, "The file is an action model");
  export_cmd.sig.attach(e);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kUsage;
  }

  try {
    if (*p) return parse_cmd.run();
    if (*c) return check_cmd.run();
    if (*u) return update_cmd.run();
    if (*t) return translate_cmd.run();
    if (*v) return verify_cmd.run();
    if (*s) return scenario_cmd.run();
    if (*e) return export_cmd.run();
  } catch (const ParseError& ex) {
    std::cerr << "dlm: parse error: " << ex.what() << '\n';
    return kParse;
  } catch (const StructureError& ex) {
    std::cerr << "dlm: invalid input: " << ex.what() << '\n';
    return kInvalid;
  } catch (const BudgetExceeded& ex) {
    std::cerr << "dlm: " << ex.what() << '\n';
    return kBudget;
  } catch (const UsageError& ex) {
    std::cerr << "dlm: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "dlm: invalid input: " << ex.what() << '\n';
    return kInvalid;
  } catch (const std::exception& ex) {
    std::cerr << "dlm: " << ex.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}
