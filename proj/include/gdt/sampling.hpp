#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdt/distribution.hpp"

namespace gdt {

// Inputs for the sampling interpretation of the inverse temperature:
// a strictly positive source M samples are drawn from, a strictly positive
// reference Q for the Boltzmann side, and pairwise distinct utilities.
struct SampleModel {
  Distribution m;
  Distribution q;
  UtilityVector u;
};

// Validates supports, strict positivity and distinct utilities.
SampleModel make_sample_model(Distribution m, Distribution q, UtilityVector u);

// Distribution of the maximum (by utility) of `alpha` i.i.d. draws from m:
// consecutive differences of the alpha-th power of the CDF in utility
// order, reported in the original support order.
Distribution max_of_alpha_distribution(const Distribution& m, const UtilityVector& u, int alpha);

// Per-outcome constants of the approximation bound, in utility order and
// excluding the top outcome (whose utility gap is zero):
//   delta = u(top) - u(x)          utility gap
//   c     = log(q(x)/q(top))       reference log ratio
//   gamma = -log F(x)              CDF exponent of m
//   xi    = max(0, c/delta)        temperature offset
struct BoundOutcomeRow {
  std::string label;
  double delta = 0.0;
  double c = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
};

struct BoundConstants {
  // Operative aggregate: the minimum over all per-outcome exponents
  // {delta, gamma}. This is the constant that makes exp(-(alpha-xi)*delta)
  // dominate every per-outcome bound.
  double delta = 0.0;
  // Aggregate taken as the maximum instead, reported for comparison.
  double delta_max = 0.0;
  double xi = 0.0;
  std::vector<BoundOutcomeRow> per_outcome;
};

BoundConstants bound_constants(const SampleModel& model);

// Diagnostics comparing the Boltzmann distribution at inverse temperature
// alpha against the analytic max-of-alpha distribution.
struct BoundReport {
  int alpha = 0;
  Distribution m_alpha;
  Distribution boltzmann;
  double sup_gap = 0.0;     // max over the support of |boltzmann - m_alpha|
  double delta = 0.0;       // operative (minimum) aggregate
  double xi = 0.0;
  double stated_bound = 0.0;  // exp(-(alpha - xi) * delta)
  bool bound_satisfied = false;
  double delta_max = 0.0;
  double stated_bound_max = 0.0;
  bool bound_satisfied_max = false;
  bool vacuous = false;  // stated bound exceeds 1, so it constrains nothing
};

std::vector<BoundReport> check_bound(const SampleModel& model, const std::vector<int>& alphas);

// Empirical distribution of the per-trial maximum of `alpha` draws from m.
// Bit-reproducible for a given (seed, trials, alpha): every trial uses its
// own generator seeded from mix64, so the result does not depend on any
// execution schedule.
Distribution monte_carlo_max(const SampleModel& model, int alpha, std::int64_t trials,
                             std::uint64_t seed);

std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& report);

}  // namespace gdt
