#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lgldpc/erasure_sim.hpp"
#include "lgldpc/gf2.hpp"
#include "lgldpc/rng.hpp"
#include "lgldpc/tanner.hpp"

namespace lgldpc {

// Coset code built on top of an LDPC Tanner graph. The graph's check matrix
// is the parity check of the LDPC code C_perp; the coset scheme transmits in
// cosets of C = (C_perp)_perp, so
//   G (generator of C)    = row basis of the Tanner check matrix,
//   H (parity check of C) = basis of its null space,
//   secret bits           = n - rank(check matrix).
// The secret s selects the coset {x : x H^T = s}; the transmitted word is
// uniform inside it. Dependent Tanner rows just shrink the rank, they are
// not an error.
class CosetCode {
 public:
  static CosetCode from_tanner(const TannerGraph& tg);

  std::size_t block_length() const { return n_; }
  std::size_t secret_bits() const { return parity_.rows(); }

  const Gf2Matrix& parity() const { return parity_; }        // H, secret_bits x n
  const Gf2Matrix& generator() const { return generator_; }  // G, (n - secret_bits) x n

  // x with x H^T = s: a particular solution placed on the free columns plus
  // a uniformly random codeword of C.
  std::vector<std::uint8_t> encode(std::span<const std::uint8_t> secret, Rng& rng) const;
  std::vector<std::uint8_t> decode(std::span<const std::uint8_t> word) const;  // s = x H^T

 private:
  std::size_t n_ = 0;
  Gf2Matrix generator_;
  Gf2Matrix parity_;
  std::vector<std::size_t> free_cols_;  // where the particular solution lives
};

// I(S; Z) <= secret_bits * P_B of the dual decoder at erasure 1 - xi, in bits.
double leakage_bound(const CosetCode& code, double xi, double p_block_estimate);

// Exact leakage machinery. For a revealed position set K the conditional
// leakage is |K| - rank(G restricted to K); the exhaustive oracle sums this
// over all 2^n reveal patterns. The per-popcount profile lets one
// enumeration serve every xi.
inline constexpr std::size_t kExhaustiveLeakageMaxN = 25;

std::vector<double> leakage_popcount_profile(const CosetCode& code);  // n <= 25
double leakage_from_profile(std::span<const double> profile, double xi);
double exact_leakage(const CosetCode& code, double xi);  // exhaustive
// Monte Carlo over reveal patterns; per-trial RNG keyed on (seed, trial), so
// the estimate is worker-count independent.
double exact_leakage_sampled(const CosetCode& code, double xi, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers = 1);

struct SecrecyReport {
  std::uint64_t n = 0;
  std::uint64_t secret_bits = 0;
  double xi = 0.0;
  TrialReport block;             // dual decoder at epsilon = 1 - xi, unbounded peeling
  double leakage_bound_bits = 0.0;
  double leakage_bound_hi = 0.0;  // secret_bits * upper Wilson bound
  std::optional<double> exact_leakage_bits;
};

SecrecyReport make_secrecy_report(const TannerGraph& tg, double xi, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers, bool with_exact);

}  // namespace lgldpc
