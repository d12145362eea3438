#include "lgldpc/density_evolution.hpp"

#include <cmath>
#include <string>

#include "lgldpc/error.hpp"

namespace lgldpc {

double de_step(const DegreeDistributionPair& ddp, double epsilon, double x) {
  if (x < 0.0 || x > 1.0) raise(ErrorCode::invalid_argument, "x outside [0,1]");
  if (epsilon < 0.0 || epsilon > 1.0) raise(ErrorCode::invalid_argument, "epsilon outside [0,1]");
  return epsilon * ddp.eval_lambda(1.0 - ddp.eval_rho(1.0 - x));
}

DeTrace de_trace(const DegreeDistributionPair& ddp, double epsilon, std::size_t t_max,
                 double tol) {
  if (t_max < 1) raise(ErrorCode::invalid_argument, "t_max must be >= 1");
  DeTrace trace;
  trace.epsilon = epsilon;
  trace.xs.reserve(t_max + 1);
  trace.xs.push_back(epsilon);
  double x = epsilon;
  for (std::size_t t = 1; t <= t_max; ++t) {
    double z = 1.0 - ddp.eval_rho(1.0 - x);
    x = epsilon * ddp.eval_lambda(z);
    trace.xs.push_back(x);
    trace.ys.push_back(epsilon * ddp.eval_L(z));
    if (x <= tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

namespace {

bool converges(const DegreeDistributionPair& ddp, double epsilon) {
  double x = epsilon;
  for (std::size_t t = 0; t < kDeMaxIterations; ++t) {
    x = epsilon * ddp.eval_lambda(1.0 - ddp.eval_rho(1.0 - x));
    if (x <= kDeConvergenceTol) return true;
  }
  return false;
}

}  // namespace

double threshold(const DegreeDistributionPair& ddp, double tol) {
  if (tol <= 0.0) raise(ErrorCode::invalid_argument, "tolerance must be positive");
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (converges(ddp, mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DecayConstants decay_constants(const DegreeDistributionPair& ddp, double epsilon) {
  const std::uint32_t l_min = ddp.l_min();
  if (l_min < 3)
    raise(ErrorCode::unsupported_ddp,
          "decay analysis needs minimum variable node degree l_min >= 3, got l_min = " +
              std::to_string(l_min));
  if (epsilon < 0.0 || epsilon > 1.0) raise(ErrorCode::invalid_argument, "epsilon outside [0,1]");

  const double r_avg = ddp.r_avg();
  DecayConstants dc;
  dc.A = epsilon * std::pow(r_avg - 1.0, static_cast<double>(l_min - 1));

  constexpr double margin = 1e-9;
  double x = epsilon;
  std::size_t t = 0;
  for (;; ++t) {
    bool cond_a = dc.A * std::pow(x, static_cast<double>(l_min - 2)) <= 1.0 - margin;
    bool cond_b = (r_avg - 1.0) * x <= 1.0 - margin;
    if (cond_a && cond_b) break;
    if (t >= kDeMaxIterations)
      raise(ErrorCode::supercritical_epsilon,
            "density evolution does not converge at epsilon = " + std::to_string(epsilon));
    x = epsilon * ddp.eval_lambda(1.0 - ddp.eval_rho(1.0 - x));
  }

  dc.R = t;
  // x_R = 0 (epsilon = 0 or numerically dead trace) degenerates to an
  // infinite decay rate, which keeps every bound statement true.
  dc.alpha_R = -std::log(dc.A) / (l_min - 2) - std::log(x);
  dc.beta = dc.alpha_R / std::pow(static_cast<double>(l_min - 1), static_cast<double>(dc.R));
  dc.prefactor = std::pow(dc.A, -1.0 / (l_min - 2));
  if (!(dc.alpha_R > 0.0))
    raise(ErrorCode::internal_inconsistency, "alpha_R must be positive by choice of R");
  return dc;
}

bool verify_decay_bound(const DegreeDistributionPair& ddp, double epsilon, std::size_t t_lo,
                        std::size_t t_hi) {
  DecayConstants dc = decay_constants(ddp, epsilon);
  if (t_hi < dc.R) return true;  // nothing to check below R by contract

  DeTrace trace = de_trace(ddp, epsilon, t_hi == 0 ? 1 : t_hi, 0.0);
  const std::uint32_t l_min = ddp.l_min();
  const double y_factor = 1.0 / (l_min * ddp.integral_lambda().to_double());

  double z = trace.xs[dc.R];
  for (std::size_t t = dc.R; t <= t_hi; ++t) {
    double x_t = t < trace.xs.size() ? trace.xs[t] : 0.0;
    if (t >= std::max(t_lo, dc.R)) {
      if (x_t > z) return false;
      if (t >= 1) {
        double y_t = t - 1 < trace.ys.size() ? trace.ys[t - 1] : 0.0;
        if (y_t > x_t * y_factor) return false;
      }
    }
    z = dc.A * std::pow(z, static_cast<double>(l_min - 1));
  }
  return true;
}

std::size_t iterations_for_secrecy(const DegreeDistributionPair& ddp, double beta,
                                   std::uint64_t n, std::uint32_t a_exp) {
  if (n < 3) raise(ErrorCode::invalid_argument, "n must be >= 3");
  if (!(beta > 0.0)) raise(ErrorCode::invalid_argument, "beta must be positive");
  if (a_exp == 0) raise(ErrorCode::invalid_argument, "a must be a positive integer");
  const std::uint32_t l_min = ddp.l_min();
  if (l_min < 3) raise(ErrorCode::unsupported_ddp, "schedule needs l_min >= 3");
  double t = (std::log(std::log(static_cast<double>(n))) + std::log(static_cast<double>(a_exp)) -
              std::log(beta)) /
             std::log(static_cast<double>(l_min - 1));
  if (t <= 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(t));
}

std::optional<std::uint64_t> t_for_girth(std::optional<std::uint32_t> girth) {
  if (!girth) return std::nullopt;  // forest: every depth is tree-like
  return (*girth - 2) / 4;
}

double tree_ensemble_prob(const DegreeDistributionPair& ddp, std::uint32_t root_degree,
                          const std::map<std::uint32_t, std::uint64_t>& internal_variables,
                          const std::map<std::uint32_t, std::uint64_t>& checks) {
  auto it_root = internal_variables.find(root_degree);
  if (it_root == internal_variables.end() || it_root->second < 1)
    raise(ErrorCode::invalid_argument, "tree counts must include the root's degree");

  double prob = ddp.node_fraction(root_degree).to_double();
  for (const auto& [degree, count] : internal_variables) {
    auto it = ddp.lambda().find(degree);
    double coeff = it == ddp.lambda().end() ? 0.0 : it->second.to_double();
    std::uint64_t exponent = degree == root_degree ? count - 1 : count;
    prob *= std::pow(coeff, static_cast<double>(exponent));
  }
  for (const auto& [degree, count] : checks) {
    auto it = ddp.rho().find(degree);
    double coeff = it == ddp.rho().end() ? 0.0 : it->second.to_double();
    prob *= std::pow(coeff, static_cast<double>(count));
  }
  return prob;
}

SecrecyCertificate secrecy_certificate(const DegreeDistributionPair& ddp, double xi,
                                       double a_budget) {
  if (xi < 0.0 || xi > 1.0) raise(ErrorCode::invalid_argument, "xi outside [0,1]");
  if (!(a_budget > 0.0)) raise(ErrorCode::invalid_argument, "girth budget must be positive");
  const std::uint32_t l_min = ddp.l_min();
  if (l_min < 3)
    raise(ErrorCode::unsupported_ddp,
          "certificates need minimum variable node degree l_min >= 3; degree-2 pairs decay "
          "only exponentially");

  const double epsilon = 1.0 - xi;
  const double eps_th = threshold(ddp, 1e-4);
  if (epsilon >= eps_th)
    raise(ErrorCode::supercritical_epsilon,
          "xi = " + std::to_string(xi) + " gives epsilon = " + std::to_string(epsilon) +
              " >= threshold " + std::to_string(eps_th));

  SecrecyCertificate cert{ddp, epsilon, eps_th, decay_constants(ddp, epsilon), 0.0, 0.0, 0.0};
  // Tree sizes grow like ((l_max-1)(r_max-1))^t = n^(a log(...)); keep the
  // exponent below 1/2 so the sampling-without-replacement correction decays.
  double growth = std::log(static_cast<double>(ddp.l_max() - 1) *
                           static_cast<double>(ddp.r_max() - 1));
  double a_cap = growth > 0.0 ? 1.0 / (2.0 * growth) : a_budget;
  cert.a = std::min(a_budget, a_cap);
  cert.c1 = cert.decay.beta;
  cert.c2 = cert.a * std::log(static_cast<double>(l_min - 1));
  return cert;
}

}  // namespace lgldpc
