#pragma once

#include <filesystem>
#include <json.hpp>
#include <vector>

#include "affine_lab/affine_line.hpp"
#include "affine_lab/families.hpp"
#include "affine_lab/geometry.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/projective.hpp"
#include "affine_lab/rational.hpp"

namespace affine_lab {

// Output uses ordered objects so that reports serialize byte-identically.
using Json = nlohmann::ordered_json;

// Encodings:
//   Rational    "p/q" or "p"            (input also accepts JSON integers)
//   Point       {"x": r, "y": r}
//   ProjPoint   {"x": i, "y": i, "z": i}
//   PlanarLine  {"a": i, "b": i, "c": i}
//   AffLine     {"m": r, "c": r}
//   matrix      [[r, r, r], [r, r, r], [r, r, r]]
// where i is a decimal integer string (JSON integers accepted on input).
// Malformed input raises std::invalid_argument.

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const ProjPoint& p);
Json to_json(const PlanarLine& l);
Json to_json(const AffLine& l);
Json to_json(const Matrix3& m);
Json to_json(const ScalarSet& s);
Json to_json(const PointSet& p);
Json to_json(std::span<const AffLine> lines);
Json to_json(std::span<const PlanarLine> lines);
Json to_json(std::span<const ProjPoint> points);
Json to_json(const LineProfile& profile);
Json to_json(const CollisionReport& report);

Rational rational_from_json(const Json& j);
Point point_from_json(const Json& j);
PlanarLine planar_line_from_json(const Json& j);
AffLine aff_line_from_json(const Json& j);
Matrix3 matrix_from_json(const Json& j);
ScalarSet scalar_set_from_json(const Json& j);
PointSet point_set_from_json(const Json& j);
LineSet line_set_from_json(const Json& j);

/// Throws std::invalid_argument when the file is missing or not JSON.
Json read_json_file(const std::filesystem::path& path);

}  // namespace affine_lab
