#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lgldpc/degree_distribution.hpp"

namespace lgldpc {

// BEC density evolution recursion for a degree distribution pair:
//   x_0 = eps,   x_t = eps * lambda(1 - rho(1 - x_{t-1}))
//   y_t = eps * L(1 - rho(1 - x_{t-1}))
// x_t tracks edge messages, y_t the bit-erasure estimate after t iterations.
struct DeTrace {
  double epsilon = 0.0;
  std::vector<double> xs;  // x_0 .. x_T
  std::vector<double> ys;  // y_1 .. y_T
  bool converged = false;

  double x_back() const { return xs.back(); }
  std::size_t iterations() const { return xs.size() - 1; }
};

// Constants of the double-exponential envelope x_t <= prefactor *
// exp(-beta * (l_min - 1)^t) valid from iteration R on:
//   A = eps * (r_avg - 1)^(l_min - 1)
//   R = first t with A x_t^(l_min-2) <= 1 and (r_avg - 1) x_t <= 1 (strict
//       margin 1e-9 on both)
//   alpha_R = -log(A)/(l_min - 2) - log(x_R),  beta = alpha_R/(l_min-1)^R,
//   prefactor = A^(-1/(l_min-2))
struct DecayConstants {
  double A = 0.0;
  std::size_t R = 0;
  double alpha_R = 0.0;
  double beta = 0.0;
  double prefactor = 0.0;
};

struct SecrecyCertificate {
  DegreeDistributionPair ddp;
  double epsilon = 0.0;     // 1 - xi, the dual decoder's channel
  double epsilon_th = 0.0;  // BEC threshold of the pair
  DecayConstants decay;
  double a = 0.0;  // iteration-schedule constant, after clamping
  double c1 = 0.0; // = beta
  double c2 = 0.0; // = a * log(l_min - 1)
};

// Defaults of the convergence predicate: x_t <= 1e-10 within 1e5 iterations.
inline constexpr std::size_t kDeMaxIterations = 100'000;
inline constexpr double kDeConvergenceTol = 1e-10;

double de_step(const DegreeDistributionPair& ddp, double epsilon, double x);

DeTrace de_trace(const DegreeDistributionPair& ddp, double epsilon, std::size_t t_max,
                 double tol);

// Bisection over epsilon in [0,1] on the convergence predicate; the returned
// midpoint is within tol of the threshold.
double threshold(const DegreeDistributionPair& ddp, double tol);

DecayConstants decay_constants(const DegreeDistributionPair& ddp, double epsilon);

// Checks, exactly (no tolerance), x_t <= prefactor*exp(-beta*(l_min-1)^t)
// and y_t <= x_t / (l_min * int(lambda)) for every t in [t_lo, t_hi]
// intersected with [R, inf). The envelope is evaluated through the
// z-recursion z_{t+1} = A z_t^(l_min-1), z_R = x_R, which equals the closed
// form but avoids a log/exp round trip at the t = R boundary where the bound
// is tight by construction.
bool verify_decay_bound(const DegreeDistributionPair& ddp, double epsilon, std::size_t t_lo,
                        std::size_t t_hi);

// ceil((log log n + log a - log beta) / log(l_min - 1)), natural logs;
// enough iterations for y_t = O(1/n^a).
std::size_t iterations_for_secrecy(const DegreeDistributionPair& ddp, double beta,
                                   std::uint64_t n, std::uint32_t a_exp);

// Iteration budget a girth-g graph supports: floor((g - 2) / 4); nullopt in
// (acyclic input) means unbounded.
std::optional<std::uint64_t> t_for_girth(std::optional<std::uint32_t> girth);

// Probability that the level-t node-rooted tree takes a given shape:
// L_{i0} * lambda_{i0}^{p_{i0}-1} * prod_{i != i0} lambda_i^{p_i} *
// prod_j rho_j^{q_j}.
double tree_ensemble_prob(const DegreeDistributionPair& ddp, std::uint32_t root_degree,
                          const std::map<std::uint32_t, std::uint64_t>& internal_variables,
                          const std::map<std::uint32_t, std::uint64_t>& checks);

// Bundles everything needed to claim leakage O(exp(-c1 n^c2)) for the coset
// scheme at eavesdropper erasure xi: requires l_min >= 3 and
// eps = 1 - xi < eps_th. The schedule constant is clamped to
// 1/(2 ln((l_max-1)(r_max-1))) so the decoding trees stay sublinear.
SecrecyCertificate secrecy_certificate(const DegreeDistributionPair& ddp, double xi,
                                       double a_budget);

}  // namespace lgldpc
