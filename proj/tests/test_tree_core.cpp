#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "json.hpp"

#include "gdt/errors.hpp"
#include "gdt/generate.hpp"
#include "gdt/io.hpp"
#include "gdt/solver.hpp"
#include "gdt/tree.hpp"

#include "helpers.hpp"

using nlohmann::json;
using namespace gdt;

namespace {

json minimal_spec() {
  return json::parse(R"({
    "horizon": 1,
    "root": "r",
    "nodes": {
      "r": { "beta": 1.5, "edges": [
        { "label": "a", "q": 0.5, "r": 0.0, "child": "x" },
        { "label": "b", "q": 0.5, "r": 1.0, "child": "y" } ] },
      "x": { "beta": 0 },
      "y": { "beta": 0, "leaf_value": 0.25 }
    }
  })");
}

// Binary tree of the given depth with uniform base probabilities.
json binary_spec(int depth, double beta) {
  json nodes = json::object();
  const int internal = (1 << depth) - 1;
  const int total = (1 << (depth + 1)) - 1;
  for (int i = 0; i < total; ++i) {
    json body;
    body["beta"] = beta;
    if (i < internal) {
      body["edges"] = json::array({
          {{"label", "0"}, {"q", 0.5}, {"r", 0.0}, {"child", "n" + std::to_string(2 * i + 1)}},
          {{"label", "1"}, {"q", 0.5}, {"r", 0.0}, {"child", "n" + std::to_string(2 * i + 2)}},
      });
    }
    nodes["n" + std::to_string(i)] = body;
  }
  return json{{"horizon", depth}, {"root", "n0"}, {"nodes", nodes}};
}

}  // namespace

TEST_CASE("inverse temperatures are totally ordered") {
  const InverseTemperature ladder[] = {
      InverseTemperature::neg_inf(),     InverseTemperature::finite(-3.0),
      InverseTemperature::finite(-0.01), InverseTemperature::zero(),
      InverseTemperature::finite(0.5),   InverseTemperature::finite(2.0),
      InverseTemperature::pos_inf()};
  for (std::size_t i = 0; i < std::size(ladder); ++i)
    for (std::size_t j = 0; j < std::size(ladder); ++j) {
      CHECK((ladder[i] < ladder[j]) == (i < j));
      CHECK((ladder[i] == ladder[j]) == (i == j));
    }
  CHECK_THROWS_AS(InverseTemperature::finite(0.0), ValidationError);
  CHECK_THROWS_AS(InverseTemperature::finite(std::nan("")), ValidationError);
}

TEST_CASE("minimal two-edge tree builds and exposes its pieces") {
  DecisionTree tree = build_tree(minimal_spec());
  CHECK(tree.size() == 3);
  CHECK(tree.horizon == 1);
  const Node& root = tree.nodes[tree.root];
  CHECK(root.name == "r");
  CHECK(root.edges.size() == 2);
  CHECK(root.beta.is_finite());
  CHECK(root.beta.value() == 1.5);
  CHECK(tree.nodes[root.edges[1].child].leaf_value == 0.25);
}

TEST_CASE("expectiminimax-shaped tree with limit temperatures builds") {
  json spec = json::parse(R"({
    "horizon": 3,
    "root": "root",
    "nodes": {
      "root": { "beta": "inf", "edges": [
        { "label": "L", "q": 0.5, "r": 0, "child": "m0" },
        { "label": "R", "q": 0.5, "r": 0, "child": "m1" } ] },
      "m0": { "beta": "-inf", "edges": [
        { "label": "L", "q": 0.5, "r": 0, "child": "c0" },
        { "label": "R", "q": 0.5, "r": 0, "child": "c1" } ] },
      "m1": { "beta": "-inf", "edges": [
        { "label": "L", "q": 0.5, "r": 0, "child": "c2" },
        { "label": "R", "q": 0.5, "r": 0, "child": "c3" } ] },
      "c0": { "beta": 0, "edges": [
        { "label": "L", "q": 0.3, "r": 0, "child": "l0" },
        { "label": "R", "q": 0.7, "r": 0, "child": "l1" } ] },
      "c1": { "beta": 0, "edges": [
        { "label": "L", "q": 0.6, "r": 0, "child": "l2" },
        { "label": "R", "q": 0.4, "r": 0, "child": "l3" } ] },
      "c2": { "beta": 0, "edges": [
        { "label": "L", "q": 0.5, "r": 0, "child": "l4" },
        { "label": "R", "q": 0.5, "r": 0, "child": "l5" } ] },
      "c3": { "beta": 0, "edges": [
        { "label": "L", "q": 0.2, "r": 0, "child": "l6" },
        { "label": "R", "q": 0.8, "r": 0, "child": "l7" } ] },
      "l0": { "beta": 0, "leaf_value": 0.1 }, "l1": { "beta": 0, "leaf_value": -0.4 },
      "l2": { "beta": 0, "leaf_value": 0.9 }, "l3": { "beta": 0, "leaf_value": 0.3 },
      "l4": { "beta": 0, "leaf_value": -0.2 }, "l5": { "beta": 0, "leaf_value": 0.6 },
      "l6": { "beta": 0, "leaf_value": 0.5 }, "l7": { "beta": 0, "leaf_value": -0.7 }
    }
  })");
  DecisionTree tree = build_tree(spec);
  CHECK(tree.size() == 15);
  CHECK(tree.nodes[tree.root].beta.kind() == InverseTemperature::Kind::PosInf);
}

TEST_CASE("invalid specs are rejected with the right class of error") {
  SUBCASE("q row summing to 0.9") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["edges"][0]["q"] = 0.4;
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("duplicate edge labels") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["edges"][1]["label"] = "a";
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("non-positive base probability") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["edges"][0]["q"] = 0.0;
    spec["nodes"]["r"]["edges"][1]["q"] = 1.0;
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("cycle back to the root") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["edges"][1]["child"] = "r";
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("shared child (two parents)") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["edges"][1]["child"] = "x";
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("non-uniform leaf depth") {
    json spec = binary_spec(2, 1.0);
    spec["nodes"]["n1"]["edges"] = json::array();  // now a leaf at depth 1
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("horizon disagrees with leaf depth") {
    json spec = minimal_spec();
    spec["horizon"] = 3;
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("nonzero leaf_value on internal node") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["leaf_value"] = 1.0;
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("unknown child") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["edges"][1]["child"] = "ghost";
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("root not among nodes") {
    json spec = minimal_spec();
    spec["root"] = "ghost";
    CHECK_THROWS_AS(build_tree(spec), ValidationError);
  }
  SUBCASE("malformed beta string") {
    json spec = minimal_spec();
    spec["nodes"]["r"]["beta"] = "huge";
    CHECK_THROWS_AS(build_tree(spec), ParseError);
  }
  SUBCASE("missing beta") {
    json spec = minimal_spec();
    spec["nodes"]["r"].erase("beta");
    CHECK_THROWS_AS(build_tree(spec), ParseError);
  }
}

TEST_CASE("fuzzed corruptions of a valid spec are rejected") {
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SplitMix64 rng(mix64(seed + 77));
    json spec = binary_spec(2 + static_cast<int>(rng.next_below(2)), 1.0);
    switch (rng.next_below(6)) {
      case 0: spec["nodes"]["n0"]["edges"][0]["q"] = -0.25; break;
      case 1: spec["nodes"]["n0"]["edges"][0]["label"] = "1"; break;
      case 2: spec["nodes"]["n1"]["edges"][1]["child"] = "n0"; break;
      case 3: spec["nodes"]["n2"]["leaf_value"] = 2.0; break;
      case 4: spec["nodes"]["n1"]["edges"] = json::array(); break;
      case 5: spec["nodes"]["n0"]["edges"][1]["q"] = 0.7; break;
    }
    try {
      build_tree(spec);
    } catch (const ValidationError&) {
      ++rejected;
    }
  }
  CHECK(rejected == 60);
}

TEST_CASE("uniform policy on a depth-2 binary tree yields four quarter paths") {
  DecisionTree tree = build_tree(binary_spec(2, 1.0));
  Policy uniform(tree.size());
  for (NodeId id = 0; id < tree.size(); ++id)
    if (!tree.nodes[id].is_leaf()) uniform[id] = Distribution::uniform({"0", "1"});
  std::vector<Trajectory> trajectories = enumerate_trajectories(tree, uniform);
  REQUIRE(trajectories.size() == 4);
  for (const Trajectory& t : trajectories) {
    CHECK(t.probability == 0.25);
    CHECK(t.labels.size() == 2);
    CHECK(t.nodes.size() == 3);
  }
}

TEST_CASE("degenerate policy concentrates all probability on one path") {
  DecisionTree tree =
      testutil::fan_tree({0.5, 0.5}, {0.0, 1.0}, {0.0, 0.0}, InverseTemperature::finite(1.0));
  Policy policy(tree.size());
  policy[0] = Distribution({"0", "1"}, {1.0, 0.0});
  std::vector<Trajectory> trajectories = enumerate_trajectories(tree, policy);
  REQUIRE(trajectories.size() == 2);
  CHECK(trajectories[0].probability == 1.0);
  CHECK(trajectories[1].probability == 0.0);
}

TEST_CASE("depth-3 branching-3 seeded policy enumerates 27 normalized paths") {
  gen::TreeGenOptions opts;
  opts.min_depth = opts.max_depth = 3;
  opts.min_branching = opts.max_branching = 3;
  DecisionTree tree = gen::random_uniform_beta_tree(11, opts, 1.0);
  SplitMix64 rng(mix64(11));
  Policy policy = testutil::random_policy(tree, rng);
  std::vector<Trajectory> trajectories = enumerate_trajectories(tree, policy);
  CHECK(trajectories.size() == 27);
  double total = 0.0;
  for (const Trajectory& t : trajectories) total += t.probability;
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("trajectory probabilities always sum to one for random valid policies") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    DecisionTree tree = gen::random_finite_tree(seed, {}, -2.0, 2.0);
    SplitMix64 rng(mix64(seed ^ 0xABCD));
    Policy policy = testutil::random_policy(tree, rng);
    std::vector<Trajectory> trajectories = enumerate_trajectories(tree, policy);
    double total = 0.0;
    for (const Trajectory& t : trajectories) total += t.probability;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("policies missing a node or with the wrong support are rejected") {
  DecisionTree tree = build_tree(binary_spec(2, 1.0));
  Policy policy(tree.size());
  for (NodeId id = 0; id < tree.size(); ++id)
    if (!tree.nodes[id].is_leaf()) policy[id] = Distribution::uniform({"0", "1"});

  SUBCASE("missing internal row") {
    policy[0] = Distribution{};
    CHECK_THROWS_AS(enumerate_trajectories(tree, policy), ValidationError);
  }
  SUBCASE("support mismatch") {
    policy[0] = Distribution::uniform({"0", "2"});
    CHECK_THROWS_AS(enumerate_trajectories(tree, policy), ValidationError);
  }
  SUBCASE("wrong length") {
    policy.pop_back();
    CHECK_THROWS_AS(enumerate_trajectories(tree, policy), ValidationError);
  }
  SUBCASE("non-normalized rows cannot even be constructed") {
    CHECK_THROWS_AS(Distribution({"0", "1"}, {0.6, 0.6}), ValidationError);
  }
}

TEST_CASE("serialized trees parse back to an equivalent tree") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DecisionTree tree = gen::random_finite_tree(seed, {}, -3.0, 3.0);
    DecisionTree reparsed = build_tree(tree_to_json(tree));
    REQUIRE(reparsed.size() == tree.size());
    SolveResult a = solve(tree);
    SolveResult b = solve(reparsed);
    // Node ids may be permuted by key ordering, so compare by name.
    std::map<std::string, double> va, vb;
    for (NodeId id = 0; id < tree.size(); ++id) va[tree.nodes[id].name] = a.value[id];
    for (NodeId id = 0; id < reparsed.size(); ++id) vb[reparsed.nodes[id].name] = b.value[id];
    CHECK(va == vb);
  }
}
