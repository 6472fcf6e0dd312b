#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gdt {

inline constexpr double kProbSumTol = 1e-12;

// Finite probability vector over a labeled outcome set. Validated on
// construction: distinct labels, entries >= 0, total within 1e-12 of 1.
// A default-constructed Distribution is the empty placeholder used for
// leaf rows in node-indexed policies.
class Distribution {
 public:
  Distribution() = default;
  Distribution(std::vector<std::string> labels, std::vector<double> probs);

  static Distribution uniform(std::vector<std::string> labels);

  std::size_t size() const { return probs_.size(); }
  bool empty() const { return probs_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  double prob(std::size_t i) const { return probs_[i]; }

  bool strictly_positive() const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

// Utility values paired with an outcome set; must share the support of the
// Distribution it is evaluated against.
struct UtilityVector {
  std::vector<std::string> labels;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

bool same_support(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Requires matching supports.
double total_variation(const Distribution& a, const Distribution& b);

}  // namespace gdt
