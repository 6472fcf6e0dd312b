#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gdt/tree.hpp"

namespace gdt {

// Output of the backward recursion. All vectors are indexed by node id.
struct SolveResult {
  // Certainty-equivalent value of each node; equals leaf_value at leaves.
  std::vector<double> value;
  // Log partition function, defined at finite-temperature nodes and at
  // leaves (where the base case fixes it to 0).
  std::vector<std::optional<double>> log_partition;
  // Equilibrium distribution over each internal node's edges.
  Policy policy;
  // Largest |beta * (r + child value)| seen before shifting; callers may
  // warn when this is large enough to cost precision.
  double max_exponent = 0.0;
};

// Backward recursion over the tree, leaves to root. At each node the value
// aggregates r + V(child) over the edges according to the node's inverse
// temperature:
//   finite beta  -> (1/beta) log sum q exp(beta (r + V)) via shifted
//                   log-sum-exp, policy proportional to the weights;
//   zero         -> expectation under q, policy = q;
//   +-infinity   -> max/min, policy = q renormalized over the arg-extremum
//                   set (ties within tie_tol).
// Deterministic: children are combined in edge order.
SolveResult solve(const DecisionTree& tree, double tie_tol = 1e-9);

// Trajectory distribution obtained by chaining the policy rows of a solve
// result over the same tree.
std::vector<Trajectory> equilibrium_trajectory_distribution(const DecisionTree& tree,
                                                            const SolveResult& result);

// Root values obtained by sweeping one internal node's inverse temperature
// through `betas`, everything else unchanged.
std::vector<std::pair<InverseTemperature, double>> value_curve(
    const DecisionTree& tree, NodeId node, const std::vector<InverseTemperature>& betas);

}  // namespace gdt
