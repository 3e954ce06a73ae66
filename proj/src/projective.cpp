#include "affine_lab/projective.hpp"

#include <stdexcept>

namespace affine_lab {

namespace {

Rational det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse3(const Matrix3& m, const Rational& det) {
  Matrix3 inv;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of m[j][i], i.e. the adjugate entry (i, j)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  }
  return inv;
}

}  // namespace

Matrix3 identity_matrix() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Rational(i == j ? 1 : 0);
  return m;
}

ProjTransform::ProjTransform(const Matrix3& matrix) : m_(matrix) {
  const Rational det = det3(m_);
  if (det.is_zero()) throw std::domain_error("projective transform: singular matrix");
  inv_ = inverse3(m_, det);
}

ProjTransform ProjTransform::identity() { return ProjTransform(identity_matrix()); }

Rational ProjTransform::determinant() const { return det3(m_); }

ProjPoint ProjTransform::apply(const ProjPoint& p) const {
  const Rational v[3] = {Rational(p.x()), Rational(p.y()), Rational(p.z())};
  Rational out[3];
  for (int i = 0; i < 3; ++i) out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return ProjPoint::from_rationals(out[0], out[1], out[2]);
}

PlanarLine ProjTransform::apply(const PlanarLine& l) const {
  // Row vector l·M⁻¹ annihilates M·p whenever l·p = 0.
  const Rational v[3] = {Rational(l.a()), Rational(l.b()), Rational(l.c())};
  Rational out[3];
  for (int j = 0; j < 3; ++j) out[j] = v[0] * inv_[0][j] + v[1] * inv_[1][j] + v[2] * inv_[2][j];
  return PlanarLine::from_rationals(out[0], out[1], out[2]);
}

std::vector<ProjPoint> ProjTransform::apply(const PointSet& points) const {
  std::vector<ProjPoint> out;
  out.reserve(points.size());
  for (const auto& p : points.points()) out.push_back(apply(ProjPoint::from_affine(p)));
  return out;
}

ProjTransform horizontal_pencil_transform(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  if (beta.is_zero()) throw std::domain_error("horizontal_pencil_transform: beta must be nonzero");
  const Rational inv = beta.reciprocal();
  Matrix3 m;
  m[0] = {Rational(1), -inv, gamma * inv};
  m[1] = {Rational(0), Rational(0), Rational(1)};
  m[2] = {Rational(0), inv, -alpha * inv};
  return ProjTransform(m);
}

ProjTransform slope_pencil_transform(const Rational& lambda, const Rational& mu) {
  if (lambda.is_zero()) throw std::domain_error("slope_pencil_transform: lambda must be nonzero");
  Matrix3 m;
  m[0] = {Rational(0), Rational(0), Rational(1)};
  m[1] = {Rational(1), Rational(0), Rational(0)};
  m[2] = {-lambda, Rational(1), -mu};
  return ProjTransform(m);
}

PointSet grid_image(const ScalarSet& a, const ScalarSet& b, const Rational& alpha, const Rational& beta,
                    const Rational& gamma) {
  if (beta.is_zero()) throw std::domain_error("grid_image: beta must be nonzero");
  if (set_contains(b, alpha)) throw std::domain_error("grid_image: alpha lies in B");
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const auto& y : b) {
    const Rational shift = y - alpha;
    for (const auto& x : a) out.push_back({(x * beta + gamma - alpha) / shift - Rational(1), beta / shift});
  }
  return PointSet(std::move(out));
}

PointSet pencil_image(const ScalarSet& a, const ScalarSet& b, const Rational& alpha) {
  if (alpha.is_zero()) throw std::domain_error("pencil_image: alpha must be nonzero");
  std::vector<Point> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x == y) continue;
      const Rational scale = alpha / (x - y);
      out.push_back({scale, scale * x});
    }
  return PointSet(std::move(out));
}

LineSet dual_lines(const PointSet& points) {
  std::vector<AffLine> out;
  for (const auto& p : points.points())
    if (!p.x.is_zero()) out.emplace_back(-p.x, p.y);
  return make_line_set(std::move(out));
}

}  // namespace affine_lab
