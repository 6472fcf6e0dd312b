#pragma once

#include "gdt/tree.hpp"

namespace gdt {

enum class NodeKind { Max, Min, Chance };

// Decision tree in which internal nodes are typed max/min/expectation
// instead of carrying an inverse temperature. Used as the reference model
// for the limit-case oracles.
struct TypedNode {
  std::string name;
  NodeKind kind = NodeKind::Chance;
  std::vector<Edge> edges;
  double leaf_value = 0.0;

  bool is_leaf() const { return edges.empty(); }
};

struct TypedTree {
  std::vector<TypedNode> nodes;
  NodeId root = 0;
  int horizon = 0;
};

// Same structural checks as decision trees: tree shape, positive normalized
// q rows, distinct labels, uniform leaf depth matching the horizon.
void validate_typed_tree(const TypedTree& tree);

// Kind -> inverse temperature mapping (Max -> +inf, Min -> -inf,
// Chance -> zero) on the same structure.
DecisionTree to_decision_tree(const TypedTree& tree);

namespace classic {

// Reference recursions, deliberately written as three separate plain
// functions with no shared numeric kernel so they can serve as independent
// oracles for the generalized solver.

// Max and Chance nodes only.
double expectimax(const TypedTree& tree);

// Max and Min nodes only.
double minimax(const TypedTree& tree);

// Any mix of Max, Min and Chance nodes.
double expectiminimax(const TypedTree& tree);

}  // namespace classic

}  // namespace gdt
