#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "zrule/factored_nat.hpp"
#include "zrule/periodicity.hpp"
#include "zrule/solitons.hpp"
#include "zrule/triangle.hpp"
#include "zrule/west_extremes.hpp"

namespace zrule::io {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Header row first, LF line endings, fields quoted only when they contain
// a comma, quote or newline.
std::string to_csv(const CsvTable& table);

CsvTable west_csv(const WestEdge& edge);
CsvTable table1_csv(const std::vector<ExtremeRow>& rows);
CsvTable table2_csv(const ComparisonStats& stats);
CsvTable listing_csv(const DivisorListing& listing);
CsvTable conjecture3_csv(const Conjecture3Report& rep);
CsvTable factored_list_csv(const std::vector<FactoredNat>& values);

// Factorizations are sorted [prime, exponent] pairs; integer values are
// decimal strings.
nlohmann::json to_json(const FactoredNat& n);
nlohmann::json to_json(const WestEdge& edge);
nlohmann::json to_json(const Triangle& t);
nlohmann::json to_json(const Tomography& t);
nlohmann::json to_json(const PeriodReport& r);
nlohmann::json to_json(const SolitonReport& r);
nlohmann::json to_json(const DisjointnessReport& r);
nlohmann::json to_json(const std::vector<ExtremeRow>& rows);
nlohmann::json to_json(const ComparisonStats& s);
nlohmann::json to_json(const DivisorListing& l);
nlohmann::json to_json(const Conjecture3Report& r);
nlohmann::json to_json(const SquarefreeReport& r);

// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& j);

// Throws std::runtime_error when the path cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace zrule::io
