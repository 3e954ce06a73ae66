#pragma once

#include <array>
#include <vector>

#include "affine_lab/affine_line.hpp"
#include "affine_lab/geometry.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/rational.hpp"

namespace affine_lab {

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// Invertible projective transformation of P². Points map by the matrix,
/// lines by its inverse transpose, so incidence is preserved exactly.
class ProjTransform {
 public:
  /// Throws std::domain_error when the determinant vanishes.
  explicit ProjTransform(const Matrix3& matrix);

  static ProjTransform identity();

  const Matrix3& matrix() const { return m_; }
  const Matrix3& inverse_matrix() const { return inv_; }
  Rational determinant() const;

  ProjPoint apply(const ProjPoint& p) const;
  PlanarLine apply(const PlanarLine& l) const;

  /// Images of an affine point set; points sent to the line at infinity
  /// are kept.
  std::vector<ProjPoint> apply(const PointSet& points) const;

 private:
  Matrix3 m_;
  Matrix3 inv_;
};

Matrix3 identity_matrix();

/**
 * For the lines y = α and y = βx + γ: sends the horizontal direction
 * [1:0:0] to itself, their intersection to [0:1:0] and the point at
 * infinity of the second line to [0:0:1].
 *
 *   ( 1  −1/β   γ/β )
 *   ( 0    0     1  )
 *   ( 0   1/β  −α/β )
 *
 * Throws std::domain_error when β = 0.
 */
ProjTransform horizontal_pencil_transform(const Rational& alpha, const Rational& beta, const Rational& gamma);

/**
 * For the line y = λx + μ: sends its direction [1:λ:0] to [0:1:0], its
 * y-intercept [0:μ:1] to [1:0:0] and the vertical direction to the origin.
 *
 *   (  0  0   1 )
 *   (  1  0   0 )
 *   ( −λ  1  −μ )
 *
 * Throws std::domain_error when λ = 0.
 */
ProjTransform slope_pencil_transform(const Rational& lambda, const Rational& mu);

/// {((aβ + γ − α)/(b − α) − 1, β/(b − α)) : a ∈ A, b ∈ B}: the image of
/// A × B under horizontal_pencil_transform. Throws std::domain_error when
/// β = 0 or α ∈ B.
PointSet grid_image(const ScalarSet& a, const ScalarSet& b, const Rational& alpha, const Rational& beta,
                    const Rational& gamma);

/// {(α/(a − b), αa/(a − b)) : a ∈ A, b ∈ B, a ≠ b}, where the line y = ax
/// meets y = bx + α. Throws std::domain_error when α = 0.
PointSet pencil_image(const ScalarSet& a, const ScalarSet& b, const Rational& alpha);

/// The point (x, y) read as the line (−x, y); points with x = 0 are
/// skipped. Applied to a pencil image this gives the lines
/// (−α/(a − b), αa/(a − b)).
LineSet dual_lines(const PointSet& points);

}  // namespace affine_lab
