#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>

#include "lgldpc/rational.hpp"

namespace lgldpc {

// Edge-perspective degree distribution pair: lambda_i is the fraction of
// edges on degree-i variable nodes (polynomial sum lambda_i x^{i-1}), rho_j
// the same on the check side. Coefficients are exact rationals; evaluation
// happens in double. Immutable once created.
class DegreeDistributionPair {
 public:
  using CoeffMap = std::map<std::uint32_t, Rational>;  // degree -> fraction

  // Validates: degrees >= 2, coefficients positive, each side summing to
  // exactly 1. Sums within 1e-6 of 1 (truncated published tables) are
  // rescaled exactly; anything further off is rejected.
  static DegreeDistributionPair create(CoeffMap lambda, CoeffMap rho);

  // Node-perspective variable fractions (fraction of *nodes* of each degree)
  // converted to edge perspective: lambda_i = i*f_i / sum_k k*f_k.
  static DegreeDistributionPair from_node_perspective(CoeffMap node_fractions, CoeffMap rho);

  // Text form, e.g. "l:3=0.5,5=0.5;r:15=1". Values are decimals or "a/b"
  // fractions keyed by node degree. A leading "L:" instead of "l:" marks the
  // variable side as node-perspective fractions.
  static DegreeDistributionPair parse(std::string_view text);

  static DegreeDistributionPair regular(std::uint32_t c, std::uint32_t d);

  const CoeffMap& lambda() const { return lambda_; }
  const CoeffMap& rho() const { return rho_; }

  std::uint32_t l_min() const { return lambda_.begin()->first; }
  std::uint32_t l_max() const { return lambda_.rbegin()->first; }
  std::uint32_t r_min() const { return rho_.begin()->first; }
  std::uint32_t r_max() const { return rho_.rbegin()->first; }
  bool is_regular() const { return lambda_.size() == 1 && rho_.size() == 1; }

  double eval_lambda(double x) const;
  double eval_rho(double x) const;
  double eval_L(double x) const;

  Rational integral_lambda() const;  // sum lambda_i / i
  Rational integral_rho() const;
  Rational node_fraction(std::uint32_t degree) const;  // L_i
  double r_avg() const;                                // 1 / integral_rho
  Rational design_rate() const;                        // 1 - int(rho)/int(lambda)

  // Algorithm inputs: k = LCM of every active degree on both sides, a = the
  // least common multiple of the coefficient denominators (lowest terms).
  std::pair<std::uint64_t, std::uint64_t> lcm_and_multiplier() const;

  std::string text() const;  // canonical "l:...;r:..." form

  friend bool operator==(const DegreeDistributionPair&, const DegreeDistributionPair&) = default;

 private:
  DegreeDistributionPair(CoeffMap lambda, CoeffMap rho)
      : lambda_(std::move(lambda)), rho_(std::move(rho)) {}

  CoeffMap lambda_;
  CoeffMap rho_;
};

}  // namespace lgldpc
