#include "gdt/tree.hpp"

#include <cmath>
#include <unordered_set>

#include "gdt/errors.hpp"

namespace gdt {

std::vector<NodeId> DecisionTree::postorder() const {
  std::vector<NodeId> order;
  order.reserve(nodes.size());
  // Explicit stack; second visit emits the node after its children.
  std::vector<std::pair<NodeId, bool>> stack;
  stack.emplace_back(root, false);
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(id);
      continue;
    }
    stack.emplace_back(id, true);
    const Node& n = nodes[id];
    for (auto it = n.edges.rbegin(); it != n.edges.rend(); ++it)
      stack.emplace_back(it->child, false);
  }
  return order;
}

void validate_tree(const DecisionTree& tree) {
  const std::size_t n = tree.nodes.size();
  if (n == 0) throw ValidationError("tree has no nodes");
  if (tree.root >= n) throw ValidationError("root id out of range");
  if (tree.horizon < 1) throw ValidationError("horizon must be a positive integer");

  for (NodeId id = 0; id < n; ++id) {
    const Node& node = tree.nodes[id];
    if (!node.edges.empty() && node.leaf_value != 0.0)
      throw ValidationError("node '" + node.name + "' is internal but has nonzero leaf_value");
    if (!std::isfinite(node.leaf_value))
      throw ValidationError("node '" + node.name + "' has non-finite leaf_value");

    std::unordered_set<std::string> labels;
    double total = 0.0;
    for (const Edge& e : node.edges) {
      if (!labels.insert(e.label).second)
        throw ValidationError("node '" + node.name + "' has duplicate edge label '" + e.label + "'");
      if (!std::isfinite(e.q) || e.q <= 0.0)
        throw ValidationError("node '" + node.name + "' edge '" + e.label +
                              "' has non-positive base probability");
      if (!std::isfinite(e.r))
        throw ValidationError("node '" + node.name + "' edge '" + e.label + "' has non-finite reward");
      if (e.child >= n)
        throw ValidationError("node '" + node.name + "' edge '" + e.label + "' points outside the arena");
      total += e.q;
    }
    if (!node.edges.empty() && std::abs(total - 1.0) > kProbSumTol)
      throw ValidationError("node '" + node.name + "' base probabilities sum to " +
                            std::to_string(total) + ", expected 1");
  }

  // Tree shape: walking from the root must reach every node exactly once.
  // A second visit means a shared child or a cycle; a miss means a node
  // with no parent.
  std::vector<char> visited(n, 0);
  std::vector<int> depth(n, 0);
  std::vector<NodeId> stack{tree.root};
  visited[tree.root] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    for (const Edge& e : tree.nodes[id].edges) {
      if (e.child == tree.root || visited[e.child])
        throw ValidationError("node '" + tree.nodes[e.child].name +
                              "' has more than one parent or lies on a cycle");
      visited[e.child] = 1;
      depth[e.child] = depth[id] + 1;
      ++count;
      stack.push_back(e.child);
    }
  }
  if (count != n) throw ValidationError("tree contains nodes unreachable from the root");

  int leaf_depth = -1;
  for (NodeId id = 0; id < n; ++id) {
    if (!tree.nodes[id].is_leaf()) continue;
    if (leaf_depth < 0) leaf_depth = depth[id];
    if (depth[id] != leaf_depth)
      throw ValidationError("leaves at unequal depths (" + std::to_string(leaf_depth) + " and " +
                            std::to_string(depth[id]) + "); uniform depth is required");
  }
  if (leaf_depth != tree.horizon)
    throw ValidationError("leaf depth " + std::to_string(leaf_depth) +
                          " does not match declared horizon " + std::to_string(tree.horizon));
}

void validate_policy(const DecisionTree& tree, const Policy& policy) {
  if (policy.size() != tree.size())
    throw ValidationError("policy covers " + std::to_string(policy.size()) + " nodes, tree has " +
                          std::to_string(tree.size()));
  for (NodeId id = 0; id < tree.size(); ++id) {
    const Node& node = tree.nodes[id];
    const Distribution& row = policy[id];
    if (node.is_leaf()) {
      if (!row.empty())
        throw ValidationError("policy assigns a row to leaf node '" + node.name + "'");
      continue;
    }
    if (row.empty()) throw ValidationError("policy is missing node '" + node.name + "'");
    if (row.size() != node.edges.size())
      throw ValidationError("policy row size mismatch at node '" + node.name + "'");
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row.label(i) != node.edges[i].label)
        throw ValidationError("policy row support mismatch at node '" + node.name + "'");
    // Normalization and nonnegativity are enforced by Distribution itself.
  }
}

std::vector<Trajectory> enumerate_trajectories(const DecisionTree& tree, const Policy& policy) {
  validate_policy(tree, policy);

  std::vector<Trajectory> out;
  std::vector<std::string> labels;
  std::vector<NodeId> path{tree.root};

  // Depth-first in edge order so the output order is reproducible.
  struct Frame {
    NodeId id;
    std::size_t next_edge;
    double prob;  // probability of the path reaching this node
  };
  std::vector<Frame> stack{{tree.root, 0, 1.0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Node& node = tree.nodes[top.id];
    if (node.is_leaf()) {
      out.push_back(Trajectory{labels, path, top.prob});
      stack.pop_back();
      if (!stack.empty()) {
        labels.pop_back();
        path.pop_back();
      }
      continue;
    }
    if (top.next_edge == node.edges.size()) {
      stack.pop_back();
      if (!stack.empty()) {
        labels.pop_back();
        path.pop_back();
      }
      continue;
    }
    std::size_t i = top.next_edge++;
    const Edge& e = node.edges[i];
    labels.push_back(e.label);
    path.push_back(e.child);
    stack.push_back({e.child, 0, top.prob * policy[top.id].prob(i)});
  }
  return out;
}

Policy base_policy(const DecisionTree& tree) {
  Policy policy(tree.size());
  for (NodeId id = 0; id < tree.size(); ++id) {
    const Node& node = tree.nodes[id];
    if (node.is_leaf()) continue;
    std::vector<std::string> labels;
    std::vector<double> probs;
    labels.reserve(node.edges.size());
    probs.reserve(node.edges.size());
    for (const Edge& e : node.edges) {
      labels.push_back(e.label);
      probs.push_back(e.q);
    }
    policy[id] = Distribution(std::move(labels), std::move(probs));
  }
  return policy;
}

}  // namespace gdt
