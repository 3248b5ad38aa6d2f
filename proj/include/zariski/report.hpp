#pragma once

#include <string>

#include <json.hpp>

#include "zariski/classify.hpp"
#include "zariski/cycles.hpp"
#include "zariski/decomposition.hpp"
#include "zariski/lattice.hpp"

namespace zariski {

// Machine-readable reports. All rationals are reduced "p/q" strings and
// every set is emitted sorted, so equal inputs give byte-identical output.

nlohmann::json minors_json(const IntersectionForm& form);
nlohmann::json check_json(const ValidatedConfig& cfg);
nlohmann::json decomposition_json(const ValidatedConfig& cfg, const ZariskiDecomposition& dec);
nlohmann::json fundamental_cycle_json(const FundamentalCycle& cycle);
nlohmann::json report_json(const ValidatedConfig& cfg, const ClassificationReport& report);

std::string provenance_name(GProvenance provenance);

// Human-readable renderings.

/// "E + 2/3 E1", or "0".
std::string format_divisor(const QDivisor& d);
std::string check_text(const ValidatedConfig& cfg);
std::string decomposition_text(const ZariskiDecomposition& dec);
std::string fundamental_cycle_text(const FundamentalCycle& cycle);
std::string report_text(const ClassificationReport& report);

}  // namespace zariski
