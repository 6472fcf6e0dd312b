#include "gdt/distribution.hpp"

#include <cmath>
#include <unordered_set>

#include "gdt/errors.hpp"

namespace gdt {

Distribution::Distribution(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size())
    throw ValidationError("distribution labels and probabilities differ in length");
  if (probs_.empty()) throw ValidationError("distribution must have at least one outcome");

  std::unordered_set<std::string> seen;
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!seen.insert(labels_[i]).second)
      throw ValidationError("duplicate outcome label '" + labels_[i] + "'");
    double p = probs_[i];
    if (!std::isfinite(p) || p < 0.0)
      throw ValidationError("probability for '" + labels_[i] + "' must be finite and >= 0");
    if (p > 1.0 + kProbSumTol)
      throw ValidationError("probability for '" + labels_[i] + "' exceeds 1");
    total += p;
  }
  if (std::abs(total - 1.0) > kProbSumTol)
    throw ValidationError("probabilities sum to " + std::to_string(total) + ", expected 1");
}

Distribution Distribution::uniform(std::vector<std::string> labels) {
  std::vector<double> probs(labels.size(), 1.0 / static_cast<double>(labels.size()));
  return Distribution(std::move(labels), std::move(probs));
}

bool Distribution::strictly_positive() const {
  for (double p : probs_)
    if (p <= 0.0) return false;
  return true;
}

bool same_support(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return a == b;
}

double total_variation(const Distribution& a, const Distribution& b) {
  if (!same_support(a.labels(), b.labels()))
    throw ValidationError("total variation requires matching supports");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a.prob(i) - b.prob(i));
  return 0.5 * acc;
}

}  // namespace gdt
