#include "polytrope/io.hpp"

#include <stdexcept>

namespace polytrope {

using nlohmann::json;

json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    const Integer& num = numerator(r);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
      return json(num.convert_to<long long>());
  }
  return json(rational_to_string(r));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

json scalar_to_json(const TropScalar& s) {
  if (s.is_infinite()) return json("inf");
  return rational_to_json(s.value());
}

TropScalar scalar_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return TropScalar::infinity();
  return TropScalar(rational_from_json(j));
}

json matrix_to_json(const WeightMatrix& m) {
  json rows = json::array();
  for (int i = 0; i <= m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j <= m.dim(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"c", std::move(rows)}};
}

json matrix_to_json(const ClosedWeightMatrix& m) { return matrix_to_json(m.as_weight_matrix()); }

WeightMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("c"))
    throw std::invalid_argument("matrix file needs \"dim\" and \"c\"");
  if (!j.at("dim").is_number_integer()) throw std::invalid_argument("\"dim\" must be an integer");
  const int d = j.at("dim").get<int>();
  if (d < 0 || d > 30) throw std::invalid_argument("unsupported dimension");
  const json& rows = j.at("c");
  if (!rows.is_array() || static_cast<int>(rows.size()) != d + 1)
    throw std::invalid_argument("\"c\" must be a (d+1) x (d+1) array");
  WeightMatrix m(d);
  for (int i = 0; i <= d; ++i) {
    const json& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
      throw std::invalid_argument("\"c\" must be a (d+1) x (d+1) array");
    for (int k = 0; k <= d; ++k) {
      TropScalar s = scalar_from_json(row.at(static_cast<std::size_t>(k)));
      if (i == k && s.is_infinite())
        throw std::invalid_argument("\"inf\" is allowed off-diagonal only");
      m.set(i, k, std::move(s));
    }
  }
  return m;
}

json coords_to_json(const std::vector<Rational>& coords) {
  json arr = json::array();
  for (const auto& c : coords) arr.push_back(rational_to_json(c));
  return arr;
}

json point_to_json(const TropPoint& p) { return coords_to_json(p.coords()); }

json points_to_json(const PointConfig& v) {
  json rows = json::array();
  for (const auto& p : v.points()) rows.push_back(point_to_json(p));
  return json{{"dim", v.dim()}, {"points", std::move(rows)}};
}

PointConfig points_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw std::invalid_argument("points file needs \"dim\" and \"points\"");
  if (!j.at("dim").is_number_integer()) throw std::invalid_argument("\"dim\" must be an integer");
  const int d = j.at("dim").get<int>();
  if (d < 0 || d > 62) throw std::invalid_argument("unsupported dimension");
  const json& rows = j.at("points");
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("\"points\" must be a nonempty array");
  std::vector<TropPoint> pts;
  pts.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
      throw std::invalid_argument("every point needs d+1 entries");
    std::vector<Rational> coords;
    coords.reserve(row.size());
    for (const json& e : row) coords.push_back(rational_from_json(e));
    pts.emplace_back(std::move(coords));
  }
  return PointConfig(d, std::move(pts));
}

json record_to_json(const CatalogRecord& rec) {
  json f = json::array();
  for (const long long v : rec.f) f.push_back(v);
  return json{{"m", rec.pseudo_vertex_count},
              {"f", std::move(f)},
              {"tropical_form", rec.tropical_form.to_string()},
              {"ordinary_form", rec.ordinary_form.to_string()},
              {"representative", matrix_to_json(rec.representative)}};
}

std::string catalog_to_jsonl(const std::vector<CatalogRecord>& catalog) {
  std::string out;
  for (const auto& rec : catalog) {
    out += record_to_json(rec).dump();
    out += '\n';
  }
  return out;
}

std::string table_to_csv(const std::vector<ClassTableRow>& rows) {
  std::string out = "m,t,o\n";
  for (const auto& row : rows)
    out += std::to_string(row.m) + "," + std::to_string(row.t) + "," + std::to_string(row.o) + "\n";
  return out;
}

}  // namespace polytrope
