#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "lexsamp/cftp.hpp"
#include "lexsamp/stats.hpp"

namespace lexsamp {

/// Space-separated 1-based labels.
std::string format_permutation(std::span<const Item> sigma, char sep = ' ');

nlohmann::json to_json(const RunStats& stats);
nlohmann::json to_json(const FrequencyReport& report);
nlohmann::json to_json(const TauSample& sample);
nlohmann::json to_json(const std::vector<SuccessPoint>& curve);
nlohmann::json to_json(const CostReport& report);

void write_text(std::ostream& out, const FrequencyReport& report);
void write_text(std::ostream& out, const TauSample& sample);
void write_text(std::ostream& out, const CostReport& report);

void write_csv(std::ostream& out, const FrequencyReport& report);
void write_csv(std::ostream& out, const TauSample& sample);
void write_csv(std::ostream& out, const CostReport& report);

} // namespace lexsamp
