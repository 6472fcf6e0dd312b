#pragma once

#include <vector>

#include "gdt/distribution.hpp"
#include "gdt/inverse_temperature.hpp"
#include "gdt/tree.hpp"

namespace gdt {

// Default absolute utility tolerance for detecting ties when taking the
// argmax/argmin limit of the equilibrium distribution.
inline constexpr double kTieTol = 1e-9;

// Equilibrium distribution p(x) proportional to q(x) * exp(alpha * u(x)),
// computed with a max-shifted exponential so |alpha * u| of several hundred
// per outcome stays overflow-free. Limit variants: Zero returns q; PosInf
// (NegInf) returns q restricted to the argmax (argmin) set of u and
// renormalized, with ties detected at tie_tol.
Distribution equilibrium_distribution(const Distribution& q, const UtilityVector& u,
                                      InverseTemperature alpha, double tie_tol = kTieTol);

// Expected utility minus (1/alpha)-weighted relative entropy of p from q,
// with the 0*log 0 = 0 convention. Infinite alpha drops the information
// term (1/alpha taken as exactly 0). Zero alpha is the limit from above:
// expected utility when p equals q, -infinity otherwise.
double free_energy_value(const Distribution& p, const Distribution& q, const UtilityVector& u,
                         InverseTemperature alpha);

// Value of the free energy at its extremum: (1/alpha) log sum q exp(alpha u)
// for finite alpha (shifted log-sum-exp), expectation at Zero, max/min at
// PosInf/NegInf.
double extremum_value(const Distribution& q, const UtilityVector& u, InverseTemperature alpha);

// Utility correction that keeps (p, q) an equilibrium pair when the inverse
// temperature moves from alpha to beta:
//   v(x) = u(x) - (1/alpha - 1/beta) * log(p(x)/q(x)).
// alpha and beta may be infinite (1/inf = 0) but not Zero; p and q must be
// strictly positive.
UtilityVector temperature_change_utility(const UtilityVector& u, const Distribution& p,
                                         const Distribution& q, InverseTemperature alpha,
                                         InverseTemperature beta);

// Utility assigned to every node of a tree, indexed by node id. Entry at
// the root is the utility of the empty history.
using TrajectoryUtilities = std::vector<double>;

// Utilities accumulated from edge rewards: root gets 0, every other node
// the sum of rewards along its path, leaves additionally their leaf_value.
TrajectoryUtilities utilities_from_rewards(const DecisionTree& tree);

// Rebuilds a tree around an explicit per-edge distribution p: the output
// keeps the structure and base probabilities, switches node temperatures to
// target_betas, zeroes leaf values, and sets every edge reward to
//   [u(child) - u(parent)] - (1/alpha - 1/beta(parent)) * log(p/q).
// p must be strictly positive on every edge; internal target betas must not
// be Zero.
DecisionTree apply_reward_transform(const DecisionTree& tree, const TrajectoryUtilities& utilities,
                                    const Policy& p, double alpha,
                                    const std::vector<InverseTemperature>& target_betas);

// Translation of a uniform-temperature tree into one with per-node
// temperatures that leaves the equilibrium distribution intact. The source
// tree must carry the same finite alpha at every node; its equilibrium is
// computed from `utilities` (edge rewards are taken as utility differences,
// so the source tree's own rewards do not enter). Equilibrium preservation
// is exact for finite targets; infinite targets degenerate to the
// arg-extremum limit.
DecisionTree transform_tree(const DecisionTree& tree, const TrajectoryUtilities& utilities,
                            const std::vector<InverseTemperature>& target_betas);

enum class FreeEnergyMode {
  Global,      // sum over whole trajectories of p * (u - (1/alpha) log(p/q))
  Telescoped,  // u(root) + expected sum over steps of r - (1/beta) log(p/q)
};

// Free energy of the whole-trajectory distribution induced by the per-edge
// distribution p. Global mode evaluates the one-shot functional on
// trajectories; Telescoped mode evaluates the per-step reward form using
// the tree's edge rewards and node temperatures. The two agree when the
// rewards were produced by apply_reward_transform with the same p.
double trajectory_free_energy(const DecisionTree& tree, const Policy& p,
                              const TrajectoryUtilities& utilities, InverseTemperature alpha,
                              FreeEnergyMode mode);

}  // namespace gdt
