#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "affine_lab/geometry.hpp"
#include "affine_lab/rational.hpp"

namespace affine_lab {

/**
 * The line y = m*x + c viewed as the affine map x -> m*x + c.
 *
 * Slope zero is rejected at construction: such a map has no inverse, and
 * vertical lines cannot be written in this form at all. Composition is
 * (m1, c1) * (m2, c2) = (m1*m2, m1*c2 + c1).
 */
class AffLine {
 public:
  /// Throws std::domain_error when slope == 0.
  AffLine(Rational slope, Rational intercept);

  static AffLine identity() { return AffLine(Rational(1), Rational(0)); }

  /// The AffLine form of a planar line, or nullopt when the line is
  /// vertical, horizontal, or the line at infinity.
  static std::optional<AffLine> from_planar(const PlanarLine& line);

  const Rational& slope() const { return m_; }
  const Rational& intercept() const { return c_; }

  Rational operator()(const Rational& x) const { return m_ * x + c_; }

  friend bool operator==(const AffLine&, const AffLine&) = default;
  friend std::strong_ordering operator<=>(const AffLine&, const AffLine&) = default;

  std::size_t hash() const { return hash_combine(m_.hash(), c_.hash()); }

 private:
  Rational m_;
  Rational c_;
};

AffLine compose(const AffLine& l1, const AffLine& l2);
AffLine inverse(const AffLine& l);

/// l1^{-1} * l2 = (m2/m1, (c2 - c1)/m1), without materializing the inverse.
AffLine quotient(const AffLine& l1, const AffLine& l2);

PlanarLine to_planar(const AffLine& l);

/// Sorted, duplicate-free set of lines.
using LineSet = std::vector<AffLine>;

LineSet make_line_set(std::vector<AffLine> lines);

}  // namespace affine_lab

template <>
struct std::hash<affine_lab::AffLine> {
  std::size_t operator()(const affine_lab::AffLine& l) const noexcept { return l.hash(); }
};
