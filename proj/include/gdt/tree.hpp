#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdt/distribution.hpp"
#include "gdt/inverse_temperature.hpp"

namespace gdt {

using NodeId = std::uint32_t;

// One transition out of a node: outcome label, base probability under the
// uncontrolled dynamics, immediate reward, and the child node.
struct Edge {
  std::string label;
  double q = 0.0;
  double r = 0.0;
  NodeId child = 0;
};

struct Node {
  std::string name;
  InverseTemperature beta;
  std::vector<Edge> edges;  // empty iff leaf; iteration is always in edge order
  double leaf_value = 0.0;  // must stay 0 on internal nodes

  bool is_leaf() const { return edges.empty(); }
};

// Rooted tree with a per-node inverse temperature and a fixed horizon.
// Immutable once validated; all operations on it are pure.
struct DecisionTree {
  std::vector<Node> nodes;
  NodeId root = 0;
  int horizon = 0;

  std::size_t size() const { return nodes.size(); }
  const Node& node(NodeId id) const { return nodes[id]; }

  // Node ids ordered children-before-parents, children in edge order.
  std::vector<NodeId> postorder() const;
};

// Checks every structural invariant: tree-shaped reachability, positive and
// normalized q rows, distinct edge labels, zero leaf_value on internal
// nodes, and uniform leaf depth equal to the declared horizon. Throws
// ValidationError with a description of the first violation found.
void validate_tree(const DecisionTree& tree);

// One root-to-leaf path. `nodes` includes the root, so it has labels.size()+1
// entries; `probability` is the product of the generating distribution's
// per-edge probabilities.
struct Trajectory {
  std::vector<std::string> labels;
  std::vector<NodeId> nodes;
  double probability = 0.0;
};

// Per-edge distributions indexed by node id. Internal nodes carry a
// Distribution whose support equals the node's edge labels in edge order;
// leaf entries stay empty.
using Policy = std::vector<Distribution>;

void validate_policy(const DecisionTree& tree, const Policy& policy);

// All root-to-leaf paths of the tree with their probabilities under
// `policy`. Probabilities sum to 1 within 1e-12 for any valid policy.
std::vector<Trajectory> enumerate_trajectories(const DecisionTree& tree, const Policy& policy);

// The uncontrolled dynamics as a policy: each internal node's q row.
Policy base_policy(const DecisionTree& tree);

}  // namespace gdt
