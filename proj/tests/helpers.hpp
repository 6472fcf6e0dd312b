#pragma once

// Shared fixtures and brute-force reference computations for the test
// suites. The walkers here deliberately re-derive everything by naive
// recursion over the raw tree so they stay independent of the library's
// enumeration and solve paths.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "gdt/free_energy.hpp"
#include "gdt/generate.hpp"
#include "gdt/rng.hpp"
#include "gdt/solver.hpp"
#include "gdt/tree.hpp"

namespace testutil {

struct PathInfo {
  std::string key;         // edge labels joined with '/'
  double q_prob = 1.0;     // product of base probabilities
  double total_reward = 0; // sum of edge rewards plus leaf value
  gdt::NodeId leaf = 0;
};

inline void walk(const gdt::DecisionTree& tree, gdt::NodeId id, const std::string& key,
                 double q_prob, double reward, std::vector<PathInfo>& out) {
  const gdt::Node& node = tree.nodes[id];
  if (node.is_leaf()) {
    out.push_back({key, q_prob, reward + node.leaf_value, id});
    return;
  }
  for (const gdt::Edge& e : node.edges)
    walk(tree, e.child, key.empty() ? e.label : key + "/" + e.label, q_prob * e.q, reward + e.r, out);
}

inline std::vector<PathInfo> all_paths(const gdt::DecisionTree& tree) {
  std::vector<PathInfo> out;
  walk(tree, tree.root, "", 1.0, 0.0, out);
  return out;
}

// Whole-trajectory Boltzmann distribution: q_prob * exp(alpha * total
// reward), normalized. Keyed by the joined label path.
inline std::map<std::string, double> brute_boltzmann(const gdt::DecisionTree& tree, double alpha) {
  std::map<std::string, double> dist;
  double total = 0.0;
  double shift = -1e300;
  const std::vector<PathInfo> paths = all_paths(tree);
  for (const PathInfo& p : paths) shift = std::max(shift, alpha * p.total_reward);
  for (const PathInfo& p : paths) {
    const double w = p.q_prob * std::exp(alpha * p.total_reward - shift);
    dist[p.key] = w;
    total += w;
  }
  for (auto& [key, w] : dist) w /= total;
  return dist;
}

inline std::map<std::string, double> trajectory_map(const std::vector<gdt::Trajectory>& list) {
  std::map<std::string, double> dist;
  for (const gdt::Trajectory& t : list) {
    std::string key;
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      key += (i == 0 ? "" : "/") + t.labels[i];
    dist[key] += t.probability;
  }
  return dist;
}

inline double map_total_variation(const std::map<std::string, double>& a,
                                  const std::map<std::string, double>& b) {
  double acc = 0.0;
  for (const auto& [key, pa] : a) {
    auto it = b.find(key);
    acc += std::abs(pa - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [key, pb] : b)
    if (!a.count(key)) acc += pb;
  return 0.5 * acc;
}

// ---- random inputs ---------------------------------------------------------

inline std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Strictly positive distribution with every entry at least floor/n.
inline gdt::Distribution random_distribution(gdt::SplitMix64& rng, std::size_t n,
                                             double floor = 0.3) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = 0.05 + rng.next_double();
    total += x;
  }
  for (double& x : w) x = floor / static_cast<double>(n) + (1.0 - floor) * (x / total);
  return gdt::Distribution(numbered_labels(n), std::move(w));
}

inline gdt::UtilityVector random_utilities(gdt::SplitMix64& rng, std::size_t n, double lo = -1.0,
                                           double hi = 1.0) {
  std::vector<double> values(n);
  for (double& v : values) v = rng.next_in(lo, hi);
  return gdt::UtilityVector{numbered_labels(n), std::move(values)};
}

// Strictly positive per-edge distributions over a tree.
inline gdt::Policy random_policy(const gdt::DecisionTree& tree, gdt::SplitMix64& rng,
                                 double floor = 0.3) {
  gdt::Policy policy(tree.size());
  for (gdt::NodeId id = 0; id < tree.size(); ++id) {
    const gdt::Node& node = tree.nodes[id];
    if (node.is_leaf()) continue;
    const std::size_t k = node.edges.size();
    std::vector<std::string> labels;
    std::vector<double> w(k);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      labels.push_back(node.edges[i].label);
      w[i] = 0.05 + rng.next_double();
      total += w[i];
    }
    for (double& x : w) x = floor / static_cast<double>(k) + (1.0 - floor) * (x / total);
    policy[id] = gdt::Distribution(std::move(labels), std::move(w));
  }
  return policy;
}

inline gdt::TrajectoryUtilities random_node_utilities(const gdt::DecisionTree& tree,
                                                      gdt::SplitMix64& rng, double lo = -1.0,
                                                      double hi = 1.0) {
  gdt::TrajectoryUtilities utilities(tree.size());
  for (double& u : utilities) u = rng.next_in(lo, hi);
  return utilities;
}

// ---- small fixtures --------------------------------------------------------

// Depth-1 tree: one decision over k labeled outcomes.
inline gdt::DecisionTree fan_tree(const std::vector<double>& q, const std::vector<double>& r,
                                  const std::vector<double>& leaf_values,
                                  gdt::InverseTemperature beta) {
  gdt::DecisionTree tree;
  tree.horizon = 1;
  tree.root = 0;
  gdt::Node root;
  root.name = "root";
  root.beta = beta;
  tree.nodes.push_back(std::move(root));
  for (std::size_t i = 0; i < q.size(); ++i) {
    gdt::Node leaf;
    leaf.name = "leaf" + std::to_string(i);
    leaf.beta = gdt::InverseTemperature::zero();
    leaf.leaf_value = leaf_values[i];
    tree.nodes.push_back(std::move(leaf));
    tree.nodes[0].edges.push_back(
        gdt::Edge{std::to_string(i), q[i], r[i], static_cast<gdt::NodeId>(i + 1)});
  }
  gdt::validate_tree(tree);
  return tree;
}

// Three-layer max/min/chance tree in the shape of the classic
// expectiminimax illustration: binary at every level, seeded leaf values.
inline gdt::TypedTree expectiminimax_fixture(std::uint64_t seed) {
  gdt::SplitMix64 rng(gdt::mix64(seed));
  gdt::TypedTree tree;
  tree.horizon = 3;
  tree.root = 0;
  tree.nodes.resize(15);
  const gdt::NodeKind kinds[3] = {gdt::NodeKind::Max, gdt::NodeKind::Min, gdt::NodeKind::Chance};
  // Complete binary tree laid out level by level: node i has children 2i+1, 2i+2.
  for (gdt::NodeId id = 0; id < 15; ++id) {
    tree.nodes[id].name = "n" + std::to_string(id);
    if (id < 7) {
      int level = id == 0 ? 0 : (id < 3 ? 1 : 2);
      tree.nodes[id].kind = kinds[level];
      const double q0 = 0.3 + 0.4 * rng.next_double();
      tree.nodes[id].edges = {gdt::Edge{"0", q0, 0.0, static_cast<gdt::NodeId>(2 * id + 1)},
                              gdt::Edge{"1", 1.0 - q0, 0.0, static_cast<gdt::NodeId>(2 * id + 2)}};
    } else {
      tree.nodes[id].leaf_value = rng.next_in(-1.0, 1.0);
    }
  }
  gdt::validate_typed_tree(tree);
  return tree;
}

}  // namespace testutil
