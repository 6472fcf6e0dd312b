#include "gdt/solver.hpp"

#include <cmath>
#include <limits>

#include "gdt/errors.hpp"

namespace gdt {

namespace {

Distribution edge_distribution(const Node& node, std::vector<double> probs) {
  std::vector<std::string> labels;
  labels.reserve(node.edges.size());
  for (const Edge& e : node.edges) labels.push_back(e.label);
  return Distribution(std::move(labels), std::move(probs));
}

}  // namespace

SolveResult solve(const DecisionTree& tree, double tie_tol) {
  SolveResult result;
  result.value.assign(tree.size(), 0.0);
  result.log_partition.assign(tree.size(), std::nullopt);
  result.policy.assign(tree.size(), Distribution{});

  for (NodeId id : tree.postorder()) {
    const Node& node = tree.nodes[id];
    if (node.is_leaf()) {
      result.value[id] = node.leaf_value;
      result.log_partition[id] = 0.0;  // Z = 1 at the horizon
      continue;
    }

    const std::size_t k = node.edges.size();
    std::vector<double> score(k);  // r + V(child), the node-local utilities
    for (std::size_t i = 0; i < k; ++i)
      score[i] = node.edges[i].r + result.value[node.edges[i].child];

    switch (node.beta.kind()) {
      case InverseTemperature::Kind::Finite: {
        const double b = node.beta.value();
        double shift = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < k; ++i) {
          const double e = b * score[i];
          result.max_exponent = std::max(result.max_exponent, std::abs(e));
          shift = std::max(shift, e);
        }
        std::vector<double> weights(k);
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
          weights[i] = node.edges[i].q * std::exp(b * score[i] - shift);
          total += weights[i];
        }
        const double log_z = shift + std::log(total);
        result.log_partition[id] = log_z;
        result.value[id] = log_z / b;
        for (double& w : weights) w /= total;
        result.policy[id] = edge_distribution(node, std::move(weights));
        break;
      }
      case InverseTemperature::Kind::Zero: {
        double acc = 0.0;
        std::vector<double> probs(k);
        for (std::size_t i = 0; i < k; ++i) {
          acc += node.edges[i].q * score[i];
          probs[i] = node.edges[i].q;
        }
        result.value[id] = acc;
        result.policy[id] = edge_distribution(node, std::move(probs));
        break;
      }
      case InverseTemperature::Kind::PosInf:
      case InverseTemperature::Kind::NegInf: {
        const bool take_max = node.beta.kind() == InverseTemperature::Kind::PosInf;
        double extreme = score[0];
        for (std::size_t i = 1; i < k; ++i)
          extreme = take_max ? std::max(extreme, score[i]) : std::min(extreme, score[i]);
        double tie_mass = 0.0;
        std::vector<double> probs(k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
          if (std::abs(score[i] - extreme) <= tie_tol) tie_mass += node.edges[i].q;
        for (std::size_t i = 0; i < k; ++i)
          if (std::abs(score[i] - extreme) <= tie_tol) probs[i] = node.edges[i].q / tie_mass;
        result.value[id] = extreme;
        result.policy[id] = edge_distribution(node, std::move(probs));
        break;
      }
    }
  }
  return result;
}

std::vector<Trajectory> equilibrium_trajectory_distribution(const DecisionTree& tree,
                                                            const SolveResult& result) {
  if (result.value.size() != tree.size() || result.policy.size() != tree.size())
    throw ValidationError("solve result does not belong to this tree");
  return enumerate_trajectories(tree, result.policy);
}

std::vector<std::pair<InverseTemperature, double>> value_curve(
    const DecisionTree& tree, NodeId node, const std::vector<InverseTemperature>& betas) {
  if (node >= tree.size()) throw ValidationError("swept node id out of range");
  if (tree.nodes[node].is_leaf())
    throw ValidationError("cannot sweep the inverse temperature of a leaf");

  std::vector<std::pair<InverseTemperature, double>> curve;
  curve.reserve(betas.size());
  DecisionTree scratch = tree;
  for (const InverseTemperature& beta : betas) {
    scratch.nodes[node].beta = beta;
    curve.emplace_back(beta, solve(scratch).value[scratch.root]);
  }
  return curve;
}

}  // namespace gdt
