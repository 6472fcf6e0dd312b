#include "gdt/generate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gdt/errors.hpp"
#include "gdt/rng.hpp"

namespace gdt::gen {

namespace {

// Structure shared by all generators: names, edges with labels/q/r, leaf
// values. Kinds and temperatures are layered on top by the callers.
struct Skeleton {
  TypedTree tree;
  std::vector<int> depth;
};

Skeleton random_skeleton(SplitMix64& rng, const TreeGenOptions& opts) {
  if (opts.min_depth < 1 || opts.max_depth < opts.min_depth)
    throw ValidationError("invalid depth range");
  if (opts.min_branching < 1 || opts.max_branching < opts.min_branching)
    throw ValidationError("invalid branching range");

  const int depth =
      opts.min_depth + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(opts.max_depth - opts.min_depth + 1)));

  Skeleton out;
  out.tree.horizon = depth;
  out.tree.root = 0;

  // Breadth-first construction; node ids are assigned in creation order.
  out.tree.nodes.push_back(TypedNode{});
  out.depth.push_back(0);
  std::vector<NodeId> frontier{0};
  for (int level = 0; level < depth; ++level) {
    std::vector<NodeId> next;
    for (NodeId id : frontier) {
      const int k =
          opts.min_branching +
          static_cast<int>(rng.next_below(
              static_cast<std::uint64_t>(opts.max_branching - opts.min_branching + 1)));

      // Dirichlet-free positive weights mixed toward uniform.
      std::vector<double> weights(k);
      double total = 0.0;
      for (double& w : weights) {
        w = 0.05 + rng.next_double();
        total += w;
      }
      const double mix = opts.q_uniform_mix;
      for (double& w : weights) w = mix / k + (1.0 - mix) * (w / total);

      for (int i = 0; i < k; ++i) {
        const NodeId child = static_cast<NodeId>(out.tree.nodes.size());
        out.tree.nodes.push_back(TypedNode{});
        out.depth.push_back(level + 1);
        Edge e;
        e.label = std::to_string(i);
        e.q = weights[i];
        e.r = rng.next_in(opts.reward_lo, opts.reward_hi);
        e.child = child;
        out.tree.nodes[id].edges.push_back(std::move(e));
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  for (NodeId id = 0; id < out.tree.nodes.size(); ++id) {
    out.tree.nodes[id].name = "n" + std::to_string(id);
    if (out.tree.nodes[id].is_leaf() && opts.random_leaf_values)
      out.tree.nodes[id].leaf_value = rng.next_in(opts.reward_lo, opts.reward_hi);
  }
  return out;
}

NodeKind kind_for(KindPattern pattern, int depth, SplitMix64& rng) {
  switch (pattern) {
    case KindPattern::MaxChance:
      return depth % 2 == 0 ? NodeKind::Max : NodeKind::Chance;
    case KindPattern::MaxMin:
      return depth % 2 == 0 ? NodeKind::Max : NodeKind::Min;
    case KindPattern::MaxChanceMinCycle:
      switch (depth % 4) {
        case 0: return NodeKind::Max;
        case 1: return NodeKind::Chance;
        case 2: return NodeKind::Min;
        default: return NodeKind::Chance;
      }
    default:
      switch (rng.next_below(3)) {
        case 0: return NodeKind::Max;
        case 1: return NodeKind::Min;
        default: return NodeKind::Chance;
      }
  }
}

}  // namespace

TypedTree random_typed_tree(std::uint64_t seed, const TreeGenOptions& opts, KindPattern pattern) {
  SplitMix64 rng(mix64(seed));
  Skeleton skeleton = random_skeleton(rng, opts);
  for (NodeId id = 0; id < skeleton.tree.nodes.size(); ++id) {
    TypedNode& node = skeleton.tree.nodes[id];
    if (!node.is_leaf()) node.kind = kind_for(pattern, skeleton.depth[id], rng);
  }
  validate_typed_tree(skeleton.tree);
  return skeleton.tree;
}

DecisionTree random_finite_tree(std::uint64_t seed, const TreeGenOptions& opts, double beta_lo,
                                double beta_hi, bool per_depth_uniform) {
  if (beta_lo >= -0.05 && beta_hi <= 0.05)
    throw ValidationError("beta range must extend past +-0.05");
  SplitMix64 rng(mix64(seed));
  Skeleton skeleton = random_skeleton(rng, opts);

  auto draw_beta = [&]() {
    double b = rng.next_in(beta_lo, beta_hi);
    while (std::abs(b) < 0.05) b = rng.next_in(beta_lo, beta_hi);
    return b;
  };

  std::vector<double> per_depth;
  if (per_depth_uniform) {
    per_depth.resize(static_cast<std::size_t>(skeleton.tree.horizon));
    for (double& b : per_depth) b = draw_beta();
  }

  DecisionTree out;
  out.root = skeleton.tree.root;
  out.horizon = skeleton.tree.horizon;
  for (NodeId id = 0; id < skeleton.tree.nodes.size(); ++id) {
    const TypedNode& src = skeleton.tree.nodes[id];
    Node node;
    node.name = src.name;
    node.edges = src.edges;
    node.leaf_value = src.leaf_value;
    const double beta = src.edges.empty()
                            ? 1.0
                            : (per_depth_uniform ? per_depth[skeleton.depth[id]] : draw_beta());
    node.beta = InverseTemperature::finite(beta);
    out.nodes.push_back(std::move(node));
  }
  validate_tree(out);
  return out;
}

DecisionTree random_uniform_beta_tree(std::uint64_t seed, const TreeGenOptions& opts, double alpha) {
  SplitMix64 rng(mix64(seed));
  Skeleton skeleton = random_skeleton(rng, opts);

  DecisionTree out;
  out.root = skeleton.tree.root;
  out.horizon = skeleton.tree.horizon;
  for (const TypedNode& src : skeleton.tree.nodes) {
    Node node;
    node.name = src.name;
    node.edges = src.edges;
    node.leaf_value = src.leaf_value;
    node.beta = InverseTemperature::finite(alpha);
    out.nodes.push_back(std::move(node));
  }
  validate_tree(out);
  return out;
}

}  // namespace gdt::gen
