#include "lgldpc/reports.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace lgldpc {

namespace {

using nlohmann::json;

// JSON has no infinity; the degenerate epsilon = 0 constants serialize as a
// string marker instead of null.
json finite_or_marker(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  if (std::isnan(v)) return json("nan");
  return json(v);
}

json ddp_obj(const DegreeDistributionPair& ddp) {
  json lambda = json::object(), rho = json::object();
  for (const auto& [deg, coeff] : ddp.lambda()) {
    lambda[std::to_string(deg)] = coeff.str();
  }
  for (const auto& [deg, coeff] : ddp.rho()) {
    rho[std::to_string(deg)] = coeff.str();
  }
  return json{{"lambda", lambda},
              {"rho", rho},
              {"l_min", ddp.l_min()},
              {"l_max", ddp.l_max()},
              {"r_min", ddp.r_min()},
              {"r_max", ddp.r_max()},
              {"design_rate", ddp.design_rate().str()},
              {"design_rate_value", ddp.design_rate().to_double()},
              {"text", ddp.text()}};
}

json recipe_obj(const BuildRecipe& recipe) {
  json j{{"target", build_target_name(recipe.target)},
         {"k", recipe.k},
         {"s", recipe.s},
         {"a", recipe.a},
         {"p", recipe.p},
         {"q", recipe.q},
         {"seed", recipe.seed},
         {"mode", recipe.mode == SplitMode::deterministic ? "deterministic" : "random"}};
  if (recipe.target == BuildTarget::cd_regular) {
    j["c"] = recipe.c;
    j["d"] = recipe.d;
  }
  if (recipe.ddp) j["ddp"] = ddp_obj(*recipe.ddp);
  return j;
}

json decay_obj(const DecayConstants& decay) {
  return json{{"A", finite_or_marker(decay.A)},
              {"R", decay.R},
              {"alpha_R", finite_or_marker(decay.alpha_R)},
              {"beta", finite_or_marker(decay.beta)},
              {"prefactor", finite_or_marker(decay.prefactor)}};
}

json trial_obj(const TrialReport& r) {
  json j{{"epsilon", r.epsilon},
         {"trials", r.trials},
         {"seed", r.seed},
         {"bit_samples", r.bit_samples},
         {"bit_erasures", r.bit_erasures},
         {"bit_rate", r.bit_rate},
         {"bit_lo", r.bit_ci.lo},
         {"bit_hi", r.bit_ci.hi},
         {"block_errors", r.block_errors},
         {"block_rate", r.block_rate},
         {"block_lo", r.block_ci.lo},
         {"block_hi", r.block_ci.hi}};
  if (r.iters_cap) j["iters"] = *r.iters_cap;
  else j["iters"] = "unbounded";
  return j;
}

std::string dump(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace

std::string ddp_json(const DegreeDistributionPair& ddp, int indent) {
  return dump(ddp_obj(ddp), indent);
}

std::string metadata_json(const BuildMetadata& meta, int indent) {
  json j{{"recipe", recipe_obj(meta.recipe)},
         {"n", meta.n},
         {"m", meta.m},
         {"girth_lower_bound", meta.girth_lower_bound},
         {"connected", meta.connected},
         {"rate", meta.rate.str()},
         {"rate_value", meta.rate.to_double()}};
  if (meta.girth_measured) j["girth_measured"] = *meta.girth_measured;
  return dump(j, indent);
}

std::string girth_json(const GirthReport& report, bool include_witness, int indent) {
  json j;
  if (report.acyclic()) {
    j["girth"] = "acyclic";
  } else {
    j["girth"] = *report.girth;
    if (include_witness) j["witness_cycle"] = report.witness_cycle;
  }
  return dump(j, indent);
}

std::string de_trace_json(const DeTrace& trace, int indent) {
  json j{{"epsilon", trace.epsilon},
         {"converged", trace.converged},
         {"iterations", trace.iterations()},
         {"xs", trace.xs},
         {"ys", trace.ys}};
  return dump(j, indent);
}

std::string decay_json(const DecayConstants& decay, int indent) {
  return dump(decay_obj(decay), indent);
}

std::string certificate_json(const SecrecyCertificate& cert, int indent) {
  json j{{"ddp", ddp_obj(cert.ddp)},
         {"epsilon", cert.epsilon},
         {"epsilon_th", cert.epsilon_th},
         {"decay", decay_obj(cert.decay)},
         {"a", cert.a},
         {"c1", finite_or_marker(cert.c1)},
         {"c2", cert.c2}};
  return dump(j, indent);
}

std::string secrecy_report_json(const SecrecyReport& report, int indent) {
  json j{{"n", report.n},
         {"secret_bits", report.secret_bits},
         {"xi", report.xi},
         {"p_block_estimate", report.block.block_rate},
         {"ci", json{{"lo", report.block.block_ci.lo}, {"hi", report.block.block_ci.hi}}},
         {"block", trial_obj(report.block)},
         {"leakage_bound_bits", report.leakage_bound_bits},
         {"leakage_bound_bits_hi", report.leakage_bound_hi}};
  if (report.exact_leakage_bits) j["exact_leakage_bits"] = *report.exact_leakage_bits;
  return dump(j, indent);
}

std::string trial_report_csv_header() {
  return "epsilon,t,trials,bit_rate,bit_lo,bit_hi,block_rate,block_lo,block_hi,seed";
}

std::string trial_report_csv_row(const TrialReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << r.epsilon << ',';
  if (r.iters_cap) out << *r.iters_cap;
  else out << -1;
  out << ',' << r.trials << ',' << r.bit_rate << ',' << r.bit_ci.lo << ',' << r.bit_ci.hi << ','
      << r.block_rate << ',' << r.block_ci.lo << ',' << r.block_ci.hi << ',' << r.seed;
  return out.str();
}

std::string error_json(const char* code_name, int status, const std::string& message) {
  json j{{"error", json{{"code", code_name}, {"status", status}, {"message", message}}}};
  return j.dump();
}

}  // namespace lgldpc
