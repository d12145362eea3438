#pragma once

#include <string>

#include "lgldpc/builders.hpp"
#include "lgldpc/density_evolution.hpp"
#include "lgldpc/erasure_sim.hpp"
#include "lgldpc/graph.hpp"
#include "lgldpc/secrecy.hpp"

// Stable JSON schemas for every report the CLI and the C API emit. Key names
// are part of the external interface; nlohmann::json keeps keys sorted, so
// serialized output is reproducible byte for byte.
namespace lgldpc {

std::string ddp_json(const DegreeDistributionPair& ddp, int indent = -1);
std::string metadata_json(const BuildMetadata& meta, int indent = -1);
std::string girth_json(const GirthReport& report, bool include_witness, int indent = -1);
std::string de_trace_json(const DeTrace& trace, int indent = -1);
std::string decay_json(const DecayConstants& decay, int indent = -1);
std::string certificate_json(const SecrecyCertificate& cert, int indent = -1);
std::string secrecy_report_json(const SecrecyReport& report, int indent = -1);
std::string trial_report_csv_header();
std::string trial_report_csv_row(const TrialReport& report);
std::string error_json(const char* code_name, int status, const std::string& message);

}  // namespace lgldpc
