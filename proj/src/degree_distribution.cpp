#include "lgldpc/degree_distribution.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "lgldpc/error.hpp"

namespace lgldpc {

namespace {

using CoeffMap = DegreeDistributionPair::CoeffMap;

CoeffMap normalize_side(CoeffMap side, const char* name) {
  if (side.empty()) raise(ErrorCode::invalid_ddp, std::string(name) + " side is empty");
  for (auto it = side.begin(); it != side.end();) {
    if (it->second.is_zero()) {
      it = side.erase(it);
      continue;
    }
    if (it->second < Rational(0))
      raise(ErrorCode::invalid_ddp, std::string(name) + " coefficient negative at degree " +
                                        std::to_string(it->first));
    if (it->first < 2)
      raise(ErrorCode::invalid_ddp,
            std::string(name) + " degree must be >= 2, got " + std::to_string(it->first));
    ++it;
  }
  if (side.empty()) raise(ErrorCode::invalid_ddp, std::string(name) + " side sums to zero");

  Rational sum(0);
  for (const auto& [deg, coeff] : side) sum += coeff;
  if (sum != Rational(1)) {
    // Published tables are often truncated decimals; rescale exactly when the
    // gap is below 1e-6, reject otherwise.
    if (std::abs(sum.to_double() - 1.0) > 1e-6)
      raise(ErrorCode::invalid_ddp, std::string(name) + " coefficients sum to " + sum.str() +
                                        ", not 1");
    for (auto& [deg, coeff] : side) coeff /= sum;
  }
  return side;
}

double eval_edge_poly(const CoeffMap& side, double x) {
  if (x < 0.0 || x > 1.0) raise(ErrorCode::invalid_argument, "polynomial argument outside [0,1]");
  double acc = 0.0;
  for (const auto& [deg, coeff] : side) acc += coeff.to_double() * std::pow(x, deg - 1);
  return acc;
}

Rational integral(const CoeffMap& side) {
  Rational acc(0);
  for (const auto& [deg, coeff] : side) acc += coeff / Rational(deg);
  return acc;
}

}  // namespace

DegreeDistributionPair DegreeDistributionPair::create(CoeffMap lambda, CoeffMap rho) {
  return DegreeDistributionPair(normalize_side(std::move(lambda), "lambda"),
                                normalize_side(std::move(rho), "rho"));
}

DegreeDistributionPair DegreeDistributionPair::from_node_perspective(CoeffMap node_fractions,
                                                                     CoeffMap rho) {
  if (node_fractions.empty()) raise(ErrorCode::invalid_ddp, "node fraction side is empty");
  Rational edge_total(0);
  for (const auto& [deg, frac] : node_fractions) {
    if (frac < Rational(0)) raise(ErrorCode::invalid_ddp, "negative node fraction");
    edge_total += frac * Rational(deg);
  }
  if (edge_total.is_zero()) raise(ErrorCode::invalid_ddp, "node fractions sum to zero");
  CoeffMap lambda;
  for (const auto& [deg, frac] : node_fractions)
    lambda[deg] = frac * Rational(deg) / edge_total;
  return create(std::move(lambda), std::move(rho));
}

DegreeDistributionPair DegreeDistributionPair::regular(std::uint32_t c, std::uint32_t d) {
  CoeffMap lambda{{c, Rational(1)}};
  CoeffMap rho{{d, Rational(1)}};
  return create(std::move(lambda), std::move(rho));
}

DegreeDistributionPair DegreeDistributionPair::parse(std::string_view text) {
  auto parse_side = [](std::string_view part, std::string_view prefix_a, std::string_view prefix_b,
                       bool* node_perspective) {
    bool node = false;
    if (part.substr(0, prefix_a.size()) == prefix_a) {
      part.remove_prefix(prefix_a.size());
    } else if (!prefix_b.empty() && part.substr(0, prefix_b.size()) == prefix_b) {
      part.remove_prefix(prefix_b.size());
      node = true;
    } else {
      raise(ErrorCode::invalid_ddp, "expected '" + std::string(prefix_a) + "' prefix in ddp text");
    }
    if (node_perspective) *node_perspective = node;
    CoeffMap side;
    while (!part.empty()) {
      std::size_t comma = part.find(',');
      std::string_view entry = part.substr(0, comma);
      part = comma == std::string_view::npos ? std::string_view{} : part.substr(comma + 1);
      std::size_t eq = entry.find('=');
      if (eq == std::string_view::npos)
        raise(ErrorCode::invalid_ddp, "ddp entry missing '=': " + std::string(entry));
      Rational deg = Rational::parse(entry.substr(0, eq));
      if (!deg.is_integer() || deg.num() < 2)
        raise(ErrorCode::invalid_ddp, "bad degree in ddp text: " + std::string(entry));
      Rational coeff = Rational::parse(entry.substr(eq + 1));
      if (!side.emplace(static_cast<std::uint32_t>(deg.num()), coeff).second)
        raise(ErrorCode::invalid_ddp, "duplicate degree in ddp text");
    }
    return side;
  };

  std::size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    raise(ErrorCode::invalid_ddp, "ddp text must be 'l:...;r:...'");
  bool lambda_is_node = false;
  CoeffMap lambda = parse_side(text.substr(0, semi), "l:", "L:", &lambda_is_node);
  CoeffMap rho = parse_side(text.substr(semi + 1), "r:", "", nullptr);
  return lambda_is_node ? from_node_perspective(std::move(lambda), std::move(rho))
                        : create(std::move(lambda), std::move(rho));
}

double DegreeDistributionPair::eval_lambda(double x) const { return eval_edge_poly(lambda_, x); }
double DegreeDistributionPair::eval_rho(double x) const { return eval_edge_poly(rho_, x); }

double DegreeDistributionPair::eval_L(double x) const {
  if (x < 0.0 || x > 1.0) raise(ErrorCode::invalid_argument, "polynomial argument outside [0,1]");
  double acc = 0.0;
  for (const auto& [deg, coeff] : lambda_)
    acc += node_fraction(deg).to_double() * std::pow(x, deg);
  return acc;
}

Rational DegreeDistributionPair::integral_lambda() const { return integral(lambda_); }
Rational DegreeDistributionPair::integral_rho() const { return integral(rho_); }

Rational DegreeDistributionPair::node_fraction(std::uint32_t degree) const {
  auto it = lambda_.find(degree);
  if (it == lambda_.end()) return Rational(0);
  return (it->second / Rational(degree)) / integral_lambda();
}

double DegreeDistributionPair::r_avg() const {
  return 1.0 / integral_rho().to_double();
}

Rational DegreeDistributionPair::design_rate() const {
  return Rational(1) - integral_rho() / integral_lambda();
}

std::pair<std::uint64_t, std::uint64_t> DegreeDistributionPair::lcm_and_multiplier() const {
  std::uint64_t k = 1, a = 1;
  for (const auto& [deg, coeff] : lambda_) {
    k = lcm_u64_checked(k, deg);
    a = lcm_u64_checked(a, static_cast<std::uint64_t>(coeff.den()));
  }
  for (const auto& [deg, coeff] : rho_) {
    k = lcm_u64_checked(k, deg);
    a = lcm_u64_checked(a, static_cast<std::uint64_t>(coeff.den()));
  }
  return {k, a};
}

std::string DegreeDistributionPair::text() const {
  std::string out = "l:";
  bool first = true;
  for (const auto& [deg, coeff] : lambda_) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(deg) + "=" + coeff.str();
  }
  out += ";r:";
  first = true;
  for (const auto& [deg, coeff] : rho_) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(deg) + "=" + coeff.str();
  }
  return out;
}

}  // namespace lgldpc
