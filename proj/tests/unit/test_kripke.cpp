#include <doctest.h>

#include "../support.hpp"
#include "dlm/explorer.hpp"
#include "dlm/io.hpp"
#include "dlm/parser.hpp"
#include "dlm/scenario.hpp"

using namespace dlm;

TEST_CASE("frame flags of the coin-trick opening") {
  const PointedModel pm = french_drop_initial();
  const FrameReport r = validate(pm.model, ModelStrictness::observational);
  CHECK(r.valid);
  CHECK(r.obs_consistent);
  for (const auto& [agent, flags] : r.agents) {
    CAPTURE(agent.name);
    CHECK(flags.euclidean);
    CHECK(flags.transitive);
    CHECK(flags.serial);
  }
}

TEST_CASE("an empty relation is vacuously Euclidean and transitive but not serial") {
  Model m(Signature{{"a"}, {"p"}}, {"w"});
  const FrameReport r = validate(m, ModelStrictness::observational);
  const RelationFlags flags = r.agents.at({"a"});
  CHECK_FALSE(flags.serial);
  CHECK(flags.euclidean);
  CHECK(flags.transitive);
  CHECK_FALSE(r.valid);
  CHECK(validate(m, ModelStrictness::relational).valid);
}

TEST_CASE("observing a fact and its negation at once is inconsistent") {
  const Signature sig{{"a"}, {"p"}};
  Model m(sig, {"w"});
  m.add_edge(AgentId{"a"}, 0, 0);
  m.set_atom(Atom::of_obs({"a"}, {{"p"}, true}), 0);
  m.set_atom(Atom::of_obs({"a"}, {{"p"}, false}), 0);
  const FrameReport r = validate(m, ModelStrictness::relational);
  CHECK_FALSE(r.obs_consistent);
  CHECK_FALSE(r.valid);
}

TEST_CASE("structural errors are hard failures") {
  const Signature sig{{"a"}, {"p"}};
  Model m(sig, {"w"});
  CHECK_THROWS_AS(m.add_edge(AgentId{"a"}, "w", "nowhere"), StructureError);
  CHECK_THROWS_AS(m.add_edge(AgentId{"zed"}, "w", "w"), StructureError);
  CHECK_THROWS_AS(point_at(m, "nowhere"), StructureError);
}

TEST_CASE("relation flags agree with a pairwise brute-force check") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t bits = 0; bits < (1U << (n * n)); ++bits) {
      std::vector<WorldSet> rel(n, WorldSet(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (bits >> (x * n + y) & 1U) rel[x].set(y);
        }
      }
      const RelationFlags got = relation_flags(rel);
      const auto want = testing::brute_flags(n, [&](std::size_t x, std::size_t y) { return rel[x].test(y); });
      CAPTURE(bits);
      CHECK(got.euclidean == want.euclidean);
      CHECK(got.transitive == want.transitive);
      CHECK(got.serial == want.serial);
    }
  }
}

TEST_CASE("satisfaction on the glance model and the coin trick") {
  const Signature sig = glance_signature();
  CHECK(satisfies(glance_model(), parse("obs(a,p) & ~obs(b,~p) & [show-(a,~p)](p & obs(b,~p) & B[b] obs(a,~p))", sig)));
  CHECK(satisfies(french_drop_initial(), french_drop_posterior()));
}

TEST_CASE("simple global truths") {
  const Signature sig{{"a", "b"}, {"p"}};
  std::size_t models = 0;
  for_each_model(make_bounds(2, sig, FrameClass::observational), [&](const Model& m) {
    ++models;
    CHECK(holds_everywhere(m, parse("B[a] true", sig)));
    CHECK(holds_everywhere(m, parse("obs(a,p) -> ~obs(a,~p)", sig)));
    CHECK(holds_everywhere(m, parse("B[a]p -> Bhat[a]p", sig)));
    CHECK_FALSE(holds_everywhere(m, parse("false", sig)));
    return true;
  });
  CHECK(models > 0);
}

TEST_CASE("a formula and its negation never both hold") {
  const Signature sig{{"a", "b"}, {"p"}};
  testing::FormulaGen gen(sig, 11);
  std::vector<Formula> fs;
  for (int i = 0; i < 20; ++i) fs.push_back(gen.formula(3, 1));
  for_each_model(make_bounds(2, sig, FrameClass::observational), [&](const Model& m) {
    for (const auto& f : fs) {
      const WorldSet pos = extension(m, f);
      const WorldSet neg = extension(m, Formula::negate(f));
      CHECK((pos & neg).none());
      CHECK((pos | neg).all());
    }
    return true;
  });
}

TEST_CASE("introspection holds on Euclidean and transitive frames") {
  const Signature sig{{"a"}, {"p"}};
  const Formula pos = parse("B[a]p -> B[a]B[a]p", sig);
  const Formula neg = parse("~B[a]p -> B[a]~B[a]p", sig);
  Bounds b = make_bounds(3, sig, FrameClass::euclidean_transitive);
  CHECK(std::holds_alternative<ValidWithinBounds>(check_validity(pos, b)));
  CHECK(std::holds_alternative<ValidWithinBounds>(check_validity(neg, b)));
  // Without the frame conditions they fail.
  b.frame_class = FrameClass::all;
  CHECK(std::holds_alternative<Countermodel>(check_validity(pos, b)));
  CHECK(std::holds_alternative<Countermodel>(check_validity(neg, b)));
}

TEST_CASE("static truth depends only on the generated submodel") {
  const Signature sig{{"a", "b"}, {"p"}};
  testing::FormulaGen gen(sig, 5);
  std::vector<Formula> fs;
  for (int i = 0; i < 10; ++i) fs.push_back(gen.formula(3, 0));
  std::size_t pruned = 0;
  enumerate(make_bounds(3, Signature{{"a"}, {"p"}}, FrameClass::all), [&](const PointedModel& pm) {
    const PointedModel sub = generated_submodel(pm);
    if (sub.model.world_count() < pm.model.world_count()) ++pruned;
    for (const auto& f : fs) {
      if (!agents_used(f).count({"b"})) CHECK(satisfies(pm, f) == satisfies(sub, f));
    }
    return true;
  });
  CHECK(pruned > 0);
}

TEST_CASE("model files round-trip") {
  const PointedModel fd = french_drop_initial();
  const PointedModel back = model_from_json(model_to_json(fd));
  CHECK(back.model == fd.model);
  CHECK(back.point == fd.point);
  CHECK(model_to_json(back) == model_to_json(fd));

  enumerate(make_bounds(2, Signature{{"a", "b"}, {"p"}}, FrameClass::all), [&](const PointedModel& pm) {
    const PointedModel again = model_from_json(model_to_json(pm));
    CHECK(again.model == pm.model);
    CHECK(again.point == pm.point);
    return true;
  });
}

TEST_CASE("malformed model documents are rejected") {
  using nlohmann::json;
  const json good = model_to_json(glance_model());
  CHECK_NOTHROW(model_from_json(good));

  json missing = good;
  missing.erase("point");
  CHECK_THROWS_AS(model_from_json(missing), StructureError);

  json dangling = good;
  dangling["relations"]["a"].push_back({"w", "ghost"});
  CHECK_THROWS_AS(model_from_json(dangling), StructureError);

  json ghost_val = good;
  ghost_val["valuation"]["ghost"] = json::array({"p"});
  CHECK_THROWS_AS(model_from_json(ghost_val), StructureError);

  json unknown_agent = good;
  unknown_agent["relations"]["zed"] = json::array();
  CHECK_THROWS_AS(model_from_json(unknown_agent), StructureError);

  json no_worlds = good;
  no_worlds["worlds"] = json::array();
  CHECK_THROWS_AS(model_from_json(no_worlds), StructureError);

  json bad_atom = good;
  bad_atom["valuation"]["w"].push_back("obs(a,");
  CHECK_THROWS_AS(model_from_json(bad_atom), ParseError);
}

TEST_CASE("trace lists subformulas in pre-order with product notes") {
  const Signature sig = glance_signature();
  const auto lines = trace(glance_model(), parse("obs(a,p) & [show-(a,~p)] obs(b,~p)", sig));
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0].depth == 0);
  CHECK(lines[0].value);
  CHECK(lines[1].formula == "obs(a,p)");
  bool noted = false;
  for (const auto& l : lines) noted = noted || l.note.find("3 worlds") != std::string::npos;
  CHECK(noted);
}
