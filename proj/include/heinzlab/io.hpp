#pragma once

#include <json.hpp>

#include "heinzlab/harness.hpp"

namespace heinzlab {

using json = nlohmann::ordered_json;

// Matrix file format: {"dim": n, "entries": [[re, im], ...]} row-major.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);
ComplexMatrix load_matrix(const std::string& path);

json case_to_json(const InequalityCase& c);
InequalityCase case_from_json(const json& j);
InequalityCase load_case(const std::string& path);
void save_case(const InequalityCase& c, const std::string& path);

json config_to_json(const CampaignConfig& cfg);
json report_to_json(const CampaignReport& rep);
void save_report(const CampaignReport& rep, const std::string& path);

}  // namespace heinzlab
