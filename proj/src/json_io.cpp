#include "affine_lab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace affine_lab {

namespace {

mpz_class integer_from_json(const Json& j, const char* field) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? to_mpz(j.get<std::uint64_t>()) : mpz_class(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw std::invalid_argument(std::string("bad integer for '") + field + "': " + j.dump());
    return z;
  }
  throw std::invalid_argument(std::string("expected an integer for '") + field + "', got " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "' in " + j.dump());
  return j.at(key);
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
  return j;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Point& p) { return Json{{"x", p.x.str()}, {"y", p.y.str()}}; }

Json to_json(const ProjPoint& p) {
  return Json{{"x", p.x().get_str()}, {"y", p.y().get_str()}, {"z", p.z().get_str()}};
}

Json to_json(const PlanarLine& l) {
  return Json{{"a", l.a().get_str()}, {"b", l.b().get_str()}, {"c", l.c().get_str()}};
}

Json to_json(const AffLine& l) { return Json{{"m", l.slope().str()}, {"c", l.intercept().str()}}; }

Json to_json(const Matrix3& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(Json{row[0].str(), row[1].str(), row[2].str()});
  return out;
}

Json to_json(const ScalarSet& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v.str());
  return out;
}

Json to_json(const PointSet& p) {
  Json out = Json::array();
  for (const auto& q : p.points()) out.push_back(to_json(q));
  return out;
}

Json to_json(std::span<const AffLine> lines) {
  Json out = Json::array();
  for (const auto& l : lines) out.push_back(to_json(l));
  return out;
}

Json to_json(std::span<const PlanarLine> lines) {
  Json out = Json::array();
  for (const auto& l : lines) out.push_back(to_json(l));
  return out;
}

Json to_json(std::span<const ProjPoint> points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

Json to_json(const LineProfile& profile) {
  Json out = Json::array();
  for (const auto& e : profile.entries()) {
    Json row = to_json(e.line);
    row["multiplicity"] = e.multiplicity;
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const CollisionReport& report) {
  Json collisions = Json::array();
  for (const auto& c : report.collisions)
    collisions.push_back(Json{{"c", c.params.c.str()}, {"d", c.params.d.str()}, {"line", to_json(c.line)}});
  return Json{{"admitted", report.admitted}, {"skipped", report.skipped}, {"collisions", std::move(collisions)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j, "value"));
  throw std::invalid_argument("expected a rational string such as \"3/4\", got " + j.dump());
}

Point point_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  return {rational_from_json(member(j, "x")), rational_from_json(member(j, "y"))};
}

PlanarLine planar_line_from_json(const Json& j) {
  return PlanarLine(integer_from_json(member(j, "a"), "a"), integer_from_json(member(j, "b"), "b"),
                    integer_from_json(member(j, "c"), "c"));
}

AffLine aff_line_from_json(const Json& j) {
  return AffLine(rational_from_json(member(j, "m")), rational_from_json(member(j, "c")));
}

Matrix3 matrix_from_json(const Json& j) {
  require_array(j, "matrix");
  if (j.size() != 3) throw std::invalid_argument("matrix must have 3 rows");
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw std::invalid_argument("matrix rows must have 3 entries");
    for (std::size_t k = 0; k < 3; ++k) m[i][k] = rational_from_json(j[i][k]);
  }
  return m;
}

ScalarSet scalar_set_from_json(const Json& j) {
  require_array(j, "set");
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(rational_from_json(v));
  return make_set(std::move(values));
}

PointSet point_set_from_json(const Json& j) {
  require_array(j, "point set");
  std::vector<Point> points;
  for (const auto& p : j) points.push_back(point_from_json(p));
  return PointSet(std::move(points));
}

LineSet line_set_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("lines") ? j.at("lines") : j;
  require_array(arr, "line set");
  std::vector<AffLine> lines;
  for (const auto& l : arr) lines.push_back(aff_line_from_json(l));
  return make_line_set(std::move(lines));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace affine_lab
