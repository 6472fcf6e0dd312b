#pragma once

#include <cstdint>

#include "gdt/classic.hpp"
#include "gdt/tree.hpp"

namespace gdt::gen {

// Knobs for the seeded random tree generators. Depth is drawn per tree,
// branching per node; leaves always end up at one uniform depth.
struct TreeGenOptions {
  int min_depth = 1;
  int max_depth = 5;
  int min_branching = 2;
  int max_branching = 4;
  double reward_lo = -1.0;
  double reward_hi = 1.0;
  bool random_leaf_values = true;  // otherwise leaves get value 0
  // Base probabilities are mixed toward uniform by this weight, which keeps
  // every q entry at least q_uniform_mix / branching.
  double q_uniform_mix = 0.5;
};

// How node kinds are assigned by depth when generating typed trees.
enum class KindPattern {
  MaxChance,          // max, chance, max, chance, ...
  MaxMin,             // max, min, max, min, ...
  MaxChanceMinCycle,  // max, chance, min, chance, ...
  RandomMix,          // independent uniform draw per node
};

TypedTree random_typed_tree(std::uint64_t seed, const TreeGenOptions& opts = {},
                            KindPattern pattern = KindPattern::RandomMix);

// Same structure generator with finite inverse temperatures drawn uniformly
// from [beta_lo, beta_hi], redrawing anything within 0.05 of zero. With
// per_depth_uniform set, one beta is drawn per depth instead of per node.
DecisionTree random_finite_tree(std::uint64_t seed, const TreeGenOptions& opts, double beta_lo,
                                double beta_hi, bool per_depth_uniform = false);

// Same structure generator with one finite alpha at every node.
DecisionTree random_uniform_beta_tree(std::uint64_t seed, const TreeGenOptions& opts, double alpha);

}  // namespace gdt::gen
