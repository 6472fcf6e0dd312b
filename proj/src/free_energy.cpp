#include "gdt/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gdt/errors.hpp"
#include "gdt/solver.hpp"

namespace gdt {

namespace {

void require_same_support(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (!same_support(a, b)) throw ValidationError("outcome supports do not match");
}

void require_strictly_positive(const Distribution& d, const char* what) {
  if (!d.strictly_positive())
    throw ValidationError(std::string(what) + " must be strictly positive");
}

// q renormalized over the arg-extremum set of u (max when sign > 0).
Distribution limit_distribution(const Distribution& q, const UtilityVector& u, bool take_max,
                                double tie_tol) {
  const std::size_t n = q.size();
  double extreme = u.values[0];
  for (double v : u.values) extreme = take_max ? std::max(extreme, v) : std::min(extreme, v);

  double tie_mass = 0.0;
  std::vector<char> in_set(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(u.values[i] - extreme) <= tie_tol) {
      in_set[i] = 1;
      tie_mass += q.prob(i);
    }
  }
  std::vector<double> probs(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    if (in_set[i]) probs[i] = q.prob(i) / tie_mass;
  return Distribution(q.labels(), std::move(probs));
}

}  // namespace

Distribution equilibrium_distribution(const Distribution& q, const UtilityVector& u,
                                      InverseTemperature alpha, double tie_tol) {
  require_same_support(q.labels(), u.labels);
  require_strictly_positive(q, "reference distribution");

  switch (alpha.kind()) {
    case InverseTemperature::Kind::Zero:
      return q;
    case InverseTemperature::Kind::PosInf:
      return limit_distribution(q, u, true, tie_tol);
    case InverseTemperature::Kind::NegInf:
      return limit_distribution(q, u, false, tie_tol);
    default:
      break;
  }

  const double a = alpha.value();
  const std::size_t n = q.size();
  std::vector<double> scaled(n);
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = a * u.values[i];
    shift = std::max(shift, scaled[i]);
  }
  std::vector<double> weights(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = q.prob(i) * std::exp(scaled[i] - shift);
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return Distribution(q.labels(), std::move(weights));
}

double free_energy_value(const Distribution& p, const Distribution& q, const UtilityVector& u,
                         InverseTemperature alpha) {
  require_same_support(p.labels(), q.labels());
  require_same_support(p.labels(), u.labels);

  double expected_utility = 0.0;
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.prob(i);
    if (pi == 0.0) continue;  // 0 * log 0 = 0
    if (q.prob(i) <= 0.0)
      throw ValidationError("p puts mass on '" + p.label(i) + "' where q vanishes");
    expected_utility += pi * u.values[i];
    kl += pi * std::log(pi / q.prob(i));
  }

  switch (alpha.kind()) {
    case InverseTemperature::Kind::Finite:
      return expected_utility - kl / alpha.value();
    case InverseTemperature::Kind::PosInf:
    case InverseTemperature::Kind::NegInf:
      return expected_utility;  // 1/alpha taken as exactly 0
    default:
      // Zero temperature: any deviation from q carries unbounded cost.
      return kl == 0.0 ? expected_utility : -std::numeric_limits<double>::infinity();
  }
}

double extremum_value(const Distribution& q, const UtilityVector& u, InverseTemperature alpha) {
  require_same_support(q.labels(), u.labels);
  require_strictly_positive(q, "reference distribution");

  switch (alpha.kind()) {
    case InverseTemperature::Kind::PosInf:
      return *std::max_element(u.values.begin(), u.values.end());
    case InverseTemperature::Kind::NegInf:
      return *std::min_element(u.values.begin(), u.values.end());
    case InverseTemperature::Kind::Zero: {
      double acc = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) acc += q.prob(i) * u.values[i];
      return acc;
    }
    default:
      break;
  }

  const double a = alpha.value();
  double shift = -std::numeric_limits<double>::infinity();
  for (double v : u.values) shift = std::max(shift, a * v);
  double total = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) total += q.prob(i) * std::exp(a * u.values[i] - shift);
  return (shift + std::log(total)) / a;
}

UtilityVector temperature_change_utility(const UtilityVector& u, const Distribution& p,
                                         const Distribution& q, InverseTemperature alpha,
                                         InverseTemperature beta) {
  require_same_support(p.labels(), q.labels());
  require_same_support(p.labels(), u.labels);
  require_strictly_positive(p, "equilibrium distribution");
  require_strictly_positive(q, "reference distribution");
  if (alpha.is_zero() || beta.is_zero())
    throw ValidationError("temperature change is undefined at zero inverse temperature");

  const double coeff = alpha.inverse_value() - beta.inverse_value();
  UtilityVector out{u.labels, std::vector<double>(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i)
    out.values[i] = u.values[i] - coeff * std::log(p.prob(i) / q.prob(i));
  return out;
}

TrajectoryUtilities utilities_from_rewards(const DecisionTree& tree) {
  TrajectoryUtilities utilities(tree.size(), 0.0);
  std::vector<NodeId> stack{tree.root};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& node = tree.nodes[id];
    if (node.is_leaf()) {
      utilities[id] += node.leaf_value;
      continue;
    }
    for (const Edge& e : node.edges) {
      utilities[e.child] = utilities[id] + e.r;
      stack.push_back(e.child);
    }
  }
  return utilities;
}

DecisionTree apply_reward_transform(const DecisionTree& tree, const TrajectoryUtilities& utilities,
                                    const Policy& p, double alpha,
                                    const std::vector<InverseTemperature>& target_betas) {
  if (utilities.size() != tree.size())
    throw ValidationError("utilities must cover every node of the tree");
  if (target_betas.size() != tree.size())
    throw ValidationError("target betas must cover every node of the tree");
  if (!std::isfinite(alpha) || alpha == 0.0)
    throw ValidationError("source inverse temperature must be finite and nonzero");
  validate_policy(tree, p);

  const double inv_alpha = 1.0 / alpha;
  DecisionTree out = tree;
  for (NodeId id = 0; id < tree.size(); ++id) {
    Node& node = out.nodes[id];
    node.beta = target_betas[id];
    node.leaf_value = 0.0;
    if (node.is_leaf()) continue;
    if (target_betas[id].is_zero())
      throw ValidationError("target beta at internal node '" + node.name +
                            "' must not be zero (1/beta enters the reward transform)");
    const double coeff = inv_alpha - target_betas[id].inverse_value();
    const Distribution& row = p[id];
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      Edge& e = node.edges[i];
      if (row.prob(i) <= 0.0)
        throw ValidationError("transform requires strictly positive edge probabilities");
      const double delta_u = utilities[e.child] - utilities[id];
      e.r = delta_u - coeff * std::log(row.prob(i) / e.q);
    }
  }
  return out;
}

DecisionTree transform_tree(const DecisionTree& tree, const TrajectoryUtilities& utilities,
                            const std::vector<InverseTemperature>& target_betas) {
  if (utilities.size() != tree.size())
    throw ValidationError("utilities must cover every node of the tree");

  // The source must run at one finite temperature at every decision point;
  // leaf temperatures never enter the recursion and are ignored.
  const Node& root = tree.nodes[tree.root];
  if (!root.beta.is_finite())
    throw ValidationError("source tree must have a finite inverse temperature");
  const double alpha = root.beta.value();
  for (const Node& node : tree.nodes)
    if (!node.is_leaf() && !(node.beta == root.beta))
      throw ValidationError(
          "source tree must carry the same inverse temperature at every internal node");

  // Equilibrium of the source at temperature alpha, with the utilities as
  // the objective: solve the tree whose rewards are the utility differences.
  DecisionTree objective = tree;
  for (NodeId id = 0; id < tree.size(); ++id) {
    Node& node = objective.nodes[id];
    node.leaf_value = 0.0;
    for (Edge& e : node.edges) e.r = utilities[e.child] - utilities[id];
  }
  SolveResult equilibrium = solve(objective);

  return apply_reward_transform(tree, utilities, equilibrium.policy, alpha, target_betas);
}

double trajectory_free_energy(const DecisionTree& tree, const Policy& p,
                              const TrajectoryUtilities& utilities, InverseTemperature alpha,
                              FreeEnergyMode mode) {
  if (!alpha.is_finite())
    throw ValidationError("trajectory free energy requires a finite inverse temperature");
  if (utilities.size() != tree.size())
    throw ValidationError("utilities must cover every node of the tree");
  validate_policy(tree, p);
  for (NodeId id = 0; id < tree.size(); ++id)
    if (!tree.nodes[id].is_leaf() && !p[id].strictly_positive())
      throw ValidationError("per-edge distribution must be strictly positive");

  const double inv_alpha = 1.0 / alpha.value();
  double acc = 0.0;

  if (mode == FreeEnergyMode::Global) {
    // Sum over trajectories of p * [u(leaf) - (1/alpha) log(P/Q)].
    std::vector<Trajectory> trajectories = enumerate_trajectories(tree, p);
    for (const Trajectory& t : trajectories) {
      double log_ratio = 0.0;
      for (std::size_t step = 0; step + 1 < t.nodes.size(); ++step) {
        const NodeId parent = t.nodes[step];
        const Node& node = tree.nodes[parent];
        for (std::size_t i = 0; i < node.edges.size(); ++i) {
          if (node.edges[i].child == t.nodes[step + 1]) {
            log_ratio += std::log(p[parent].prob(i) / node.edges[i].q);
            break;
          }
        }
      }
      acc += t.probability * (utilities[t.nodes.back()] - inv_alpha * log_ratio);
    }
    return acc;
  }

  // Telescoped: u(root) plus the expected per-step contributions
  // r - (1/beta(parent)) log(p/q), accumulated by a root-to-leaf sweep of
  // node visit probabilities.
  std::vector<double> reach(tree.size(), 0.0);
  reach[tree.root] = 1.0;
  std::vector<NodeId> stack{tree.root};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& node = tree.nodes[id];
    if (node.is_leaf()) continue;
    if (node.beta.is_zero())
      throw ValidationError("telescoped mode is undefined at zero inverse temperature nodes");
    const double inv_beta = node.beta.inverse_value();
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      const Edge& e = node.edges[i];
      const double step_p = p[id].prob(i);
      acc += reach[id] * step_p * (e.r - inv_beta * std::log(step_p / e.q));
      reach[e.child] = reach[id] * step_p;
      stack.push_back(e.child);
    }
  }
  return utilities[tree.root] + acc;
}

}  // namespace gdt
