#pragma once

#include "polytrope/classify.hpp"
#include "polytrope/covector.hpp"
#include "polytrope/weight_matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polytrope {

// File formats.  Matrix files: {"dim": d, "c": [[...]]} with entries either
// an integer, a string "p/q" in lowest terms, or "inf" (off-diagonal only).
// Points files: {"dim": d, "points": [[d+1 entries]]}.  Parsers throw
// std::invalid_argument on malformed input.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const TropScalar& s);
TropScalar scalar_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const WeightMatrix& m);
nlohmann::json matrix_to_json(const ClosedWeightMatrix& m);
WeightMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json points_to_json(const PointConfig& v);
PointConfig points_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const TropPoint& p);
nlohmann::json coords_to_json(const std::vector<Rational>& coords);

nlohmann::json record_to_json(const CatalogRecord& rec);

std::string catalog_to_jsonl(const std::vector<CatalogRecord>& catalog);
std::string table_to_csv(const std::vector<ClassTableRow>& rows);

}  // namespace polytrope
