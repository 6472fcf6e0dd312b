#include "gdt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "gdt/errors.hpp"
#include "gdt/free_energy.hpp"
#include "gdt/rng.hpp"

namespace gdt {

namespace {

// Indices of the support sorted by utility, ascending. Rejects ties: the
// ordering underlying the max-of-samples CDF must be strict.
std::vector<std::size_t> utility_order(const UtilityVector& u) {
  std::vector<std::size_t> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return u.values[a] < u.values[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (u.values[order[i]] == u.values[order[i - 1]])
      throw ValidationError("utilities must be pairwise distinct");
  return order;
}

// CDF of m in utility order, with the final entry pinned to exactly 1.
std::vector<double> utility_cdf(const Distribution& m, const std::vector<std::size_t>& order) {
  std::vector<double> cdf(order.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    acc += m.prob(order[i]);
    cdf[i] = acc;
  }
  const double total = acc;
  for (double& f : cdf) f /= total;
  cdf.back() = 1.0;
  return cdf;
}

}  // namespace

SampleModel make_sample_model(Distribution m, Distribution q, UtilityVector u) {
  if (!same_support(m.labels(), q.labels()) || !same_support(m.labels(), u.labels))
    throw ValidationError("sample model requires one shared support for m, q and u");
  if (!m.strictly_positive()) throw ValidationError("source distribution m must be strictly positive");
  if (!q.strictly_positive()) throw ValidationError("reference distribution q must be strictly positive");
  utility_order(u);  // rejects ties
  return SampleModel{std::move(m), std::move(q), std::move(u)};
}

Distribution max_of_alpha_distribution(const Distribution& m, const UtilityVector& u, int alpha) {
  if (!same_support(m.labels(), u.labels))
    throw ValidationError("m and u must share a support");
  if (alpha < 1) throw ValidationError("alpha must be a positive integer");

  const std::vector<std::size_t> order = utility_order(u);
  const std::vector<double> cdf = utility_cdf(m, order);

  std::vector<double> probs(m.size(), 0.0);
  double previous = 0.0;  // F(x_0)^alpha = 0
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double current = std::pow(cdf[i], alpha);
    probs[order[i]] = current - previous;
    previous = current;
  }
  return Distribution(m.labels(), std::move(probs));
}

BoundConstants bound_constants(const SampleModel& model) {
  const std::vector<std::size_t> order = utility_order(model.u);
  const std::vector<double> cdf = utility_cdf(model.m, order);
  const std::size_t top = order.back();

  BoundConstants out;
  out.delta = std::numeric_limits<double>::infinity();
  out.delta_max = 0.0;
  out.xi = 0.0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const std::size_t idx = order[i];
    BoundOutcomeRow row;
    row.label = model.u.labels[idx];
    row.delta = model.u.values[top] - model.u.values[idx];
    row.c = std::log(model.q.prob(idx)) - std::log(model.q.prob(top));
    row.gamma = -std::log(cdf[i]);
    // The bound's relaxation steps need xi >= 0; negative ratios clamp.
    row.xi = std::max(0.0, row.c / row.delta);
    out.delta = std::min({out.delta, row.delta, row.gamma});
    out.delta_max = std::max({out.delta_max, row.delta, row.gamma});
    out.xi = std::max(out.xi, row.xi);
    out.per_outcome.push_back(std::move(row));
  }
  return out;
}

std::vector<BoundReport> check_bound(const SampleModel& model, const std::vector<int>& alphas) {
  if (alphas.empty()) throw ValidationError("at least one alpha is required");
  const BoundConstants constants = bound_constants(model);

  std::vector<BoundReport> reports;
  reports.reserve(alphas.size());
  for (int alpha : alphas) {
    if (alpha < 1) throw ValidationError("alpha must be a positive integer");
    BoundReport report;
    report.alpha = alpha;
    report.boltzmann = equilibrium_distribution(
        model.q, model.u, InverseTemperature::finite(static_cast<double>(alpha)));
    report.m_alpha = max_of_alpha_distribution(model.m, model.u, alpha);
    report.sup_gap = 0.0;
    for (std::size_t i = 0; i < model.m.size(); ++i)
      report.sup_gap =
          std::max(report.sup_gap, std::abs(report.boltzmann.prob(i) - report.m_alpha.prob(i)));
    report.delta = constants.delta;
    report.delta_max = constants.delta_max;
    report.xi = constants.xi;
    report.stated_bound = std::exp(-(alpha - constants.xi) * constants.delta);
    report.stated_bound_max = std::exp(-(alpha - constants.xi) * constants.delta_max);
    report.bound_satisfied = report.sup_gap <= report.stated_bound + 1e-12;
    report.bound_satisfied_max = report.sup_gap <= report.stated_bound_max + 1e-12;
    report.vacuous = report.stated_bound > 1.0;
    reports.push_back(std::move(report));
  }
  return reports;
}

Distribution monte_carlo_max(const SampleModel& model, int alpha, std::int64_t trials,
                             std::uint64_t seed) {
  if (alpha < 1) throw ValidationError("alpha must be a positive integer");
  if (trials < 1) throw ValidationError("trials must be positive");

  // Inverse-CDF sampling in original support order.
  const std::size_t n = model.m.size();
  std::vector<double> cdf(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += model.m.prob(i);
    cdf[i] = acc;
  }
  cdf.back() = std::max(cdf.back(), 1.0);

  std::vector<std::int64_t> counts(n, 0);
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(trial))));
    std::size_t best = 0;
    bool have_best = false;
    for (int draw = 0; draw < alpha; ++draw) {
      const double x = rng.next_double();
      std::size_t idx = 0;
      while (idx + 1 < n && cdf[idx] <= x) ++idx;
      if (!have_best || model.u.values[idx] > model.u.values[best]) {
        best = idx;
        have_best = true;
      }
    }
    ++counts[best];
  }

  std::vector<double> probs(n);
  for (std::size_t i = 0; i < n; ++i)
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(trials);
  return Distribution(model.m.labels(), std::move(probs));
}

std::string bound_report_csv_header() {
  return "alpha,sup_gap,delta,xi,stated_bound,bound_satisfied";
}

std::string bound_report_csv_row(const BoundReport& report) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%d,%.17g,%.17g,%.17g,%.17g,%s", report.alpha,
                report.sup_gap, report.delta, report.xi, report.stated_bound,
                report.bound_satisfied ? "true" : "false");
  return buffer;
}

}  // namespace gdt
