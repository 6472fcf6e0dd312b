#include "gdt/classic.hpp"

#include <cmath>
#include <unordered_set>

#include "gdt/errors.hpp"

namespace gdt {

void validate_typed_tree(const TypedTree& tree) {
  const std::size_t n = tree.nodes.size();
  if (n == 0) throw ValidationError("tree has no nodes");
  if (tree.root >= n) throw ValidationError("root id out of range");
  if (tree.horizon < 1) throw ValidationError("horizon must be a positive integer");

  for (const TypedNode& node : tree.nodes) {
    if (!node.edges.empty() && node.leaf_value != 0.0)
      throw ValidationError("node '" + node.name + "' is internal but has nonzero leaf_value");
    std::unordered_set<std::string> labels;
    double total = 0.0;
    for (const Edge& e : node.edges) {
      if (!labels.insert(e.label).second)
        throw ValidationError("node '" + node.name + "' has duplicate edge label '" + e.label + "'");
      if (!std::isfinite(e.q) || e.q <= 0.0)
        throw ValidationError("node '" + node.name + "' edge '" + e.label +
                              "' has non-positive base probability");
      if (e.child >= n)
        throw ValidationError("node '" + node.name + "' edge '" + e.label + "' points outside the arena");
      total += e.q;
    }
    if (!node.edges.empty() && std::abs(total - 1.0) > kProbSumTol)
      throw ValidationError("node '" + node.name + "' base probabilities sum to " +
                            std::to_string(total) + ", expected 1");
  }

  std::vector<char> visited(n, 0);
  std::vector<int> depth(n, 0);
  std::vector<NodeId> stack{tree.root};
  visited[tree.root] = 1;
  std::size_t count = 1;
  int leaf_depth = -1;
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (tree.nodes[id].is_leaf()) {
      if (leaf_depth < 0) leaf_depth = depth[id];
      if (depth[id] != leaf_depth) throw ValidationError("leaves at unequal depths");
    }
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
  if (leaf_depth != tree.horizon)
    throw ValidationError("leaf depth does not match declared horizon");
}

DecisionTree to_decision_tree(const TypedTree& tree) {
  DecisionTree out;
  out.root = tree.root;
  out.horizon = tree.horizon;
  out.nodes.reserve(tree.nodes.size());
  for (const TypedNode& node : tree.nodes) {
    Node converted;
    converted.name = node.name;
    converted.edges = node.edges;
    converted.leaf_value = node.leaf_value;
    switch (node.kind) {
      case NodeKind::Max: converted.beta = InverseTemperature::pos_inf(); break;
      case NodeKind::Min: converted.beta = InverseTemperature::neg_inf(); break;
      case NodeKind::Chance: converted.beta = InverseTemperature::zero(); break;
    }
    out.nodes.push_back(std::move(converted));
  }
  validate_tree(out);
  return out;
}

namespace classic {

namespace {

double expectimax_node(const TypedTree& tree, NodeId id) {
  const TypedNode& node = tree.nodes[id];
  if (node.is_leaf()) return node.leaf_value;
  if (node.kind == NodeKind::Max) {
    double best = node.edges[0].r + expectimax_node(tree, node.edges[0].child);
    for (std::size_t i = 1; i < node.edges.size(); ++i) {
      const double s = node.edges[i].r + expectimax_node(tree, node.edges[i].child);
      if (s > best) best = s;
    }
    return best;
  }
  if (node.kind == NodeKind::Chance) {
    double acc = 0.0;
    for (const Edge& e : node.edges) {
      const double s = e.r + expectimax_node(tree, e.child);
      acc += e.q * s;
    }
    return acc;
  }
  throw ValidationError("expectimax tree contains a min node");
}

double minimax_node(const TypedTree& tree, NodeId id) {
  const TypedNode& node = tree.nodes[id];
  if (node.is_leaf()) return node.leaf_value;
  if (node.kind == NodeKind::Max) {
    double best = node.edges[0].r + minimax_node(tree, node.edges[0].child);
    for (std::size_t i = 1; i < node.edges.size(); ++i) {
      const double s = node.edges[i].r + minimax_node(tree, node.edges[i].child);
      if (s > best) best = s;
    }
    return best;
  }
  if (node.kind == NodeKind::Min) {
    double worst = node.edges[0].r + minimax_node(tree, node.edges[0].child);
    for (std::size_t i = 1; i < node.edges.size(); ++i) {
      const double s = node.edges[i].r + minimax_node(tree, node.edges[i].child);
      if (s < worst) worst = s;
    }
    return worst;
  }
  throw ValidationError("minimax tree contains a chance node");
}

double expectiminimax_node(const TypedTree& tree, NodeId id) {
  const TypedNode& node = tree.nodes[id];
  if (node.is_leaf()) return node.leaf_value;
  switch (node.kind) {
    case NodeKind::Max: {
      double best = node.edges[0].r + expectiminimax_node(tree, node.edges[0].child);
      for (std::size_t i = 1; i < node.edges.size(); ++i) {
        const double s = node.edges[i].r + expectiminimax_node(tree, node.edges[i].child);
        if (s > best) best = s;
      }
      return best;
    }
    case NodeKind::Min: {
      double worst = node.edges[0].r + expectiminimax_node(tree, node.edges[0].child);
      for (std::size_t i = 1; i < node.edges.size(); ++i) {
        const double s = node.edges[i].r + expectiminimax_node(tree, node.edges[i].child);
        if (s < worst) worst = s;
      }
      return worst;
    }
    default: {
      double acc = 0.0;
      for (const Edge& e : node.edges) {
        const double s = e.r + expectiminimax_node(tree, e.child);
        acc += e.q * s;
      }
      return acc;
    }
  }
}

}  // namespace

double expectimax(const TypedTree& tree) { return expectimax_node(tree, tree.root); }

double minimax(const TypedTree& tree) { return minimax_node(tree, tree.root); }

double expectiminimax(const TypedTree& tree) { return expectiminimax_node(tree, tree.root); }

}  // namespace classic

}  // namespace gdt
