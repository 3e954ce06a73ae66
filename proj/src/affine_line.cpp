#include "affine_lab/affine_line.hpp"

#include <algorithm>
#include <stdexcept>

namespace affine_lab {

AffLine::AffLine(Rational slope, Rational intercept) : m_(std::move(slope)), c_(std::move(intercept)) {
  if (m_.is_zero()) throw std::domain_error("AffLine: slope must be nonzero");
}

std::optional<AffLine> AffLine::from_planar(const PlanarLine& line) {
  if (line.b() == 0 || line.a() == 0) return std::nullopt;
  return AffLine(*line.slope(), *line.y_intercept());
}

AffLine compose(const AffLine& l1, const AffLine& l2) {
  return AffLine(l1.slope() * l2.slope(), l1.slope() * l2.intercept() + l1.intercept());
}

AffLine inverse(const AffLine& l) {
  const Rational inv = l.slope().reciprocal();
  return AffLine(inv, -(l.intercept() * inv));
}

AffLine quotient(const AffLine& l1, const AffLine& l2) {
  return AffLine(l2.slope() / l1.slope(), (l2.intercept() - l1.intercept()) / l1.slope());
}

PlanarLine to_planar(const AffLine& l) {
  return PlanarLine::with_slope(l.slope(), l.intercept());
}

LineSet make_line_set(std::vector<AffLine> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

}  // namespace affine_lab
