#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "affine_lab/rational.hpp"

namespace affine_lab {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

std::size_t hash_value(const Point& p);

// Shared comparison for canonical integer triples.
std::strong_ordering compare_triples(const mpz_class& a0, const mpz_class& a1, const mpz_class& a2,
                                     const mpz_class& b0, const mpz_class& b1, const mpz_class& b2);

/**
 * Point of the real projective plane, [x:y:z] with integer coordinates.
 *
 * Stored canonically: gcd(|x|,|y|,|z|) = 1 and the first nonzero coordinate
 * is positive, so equal points have equal fields.
 */
class ProjPoint {
 public:
  /// Throws std::domain_error when x = y = z = 0.
  ProjPoint(mpz_class x, mpz_class y, mpz_class z);

  /// Homogeneous point from rational coordinates (clears denominators).
  static ProjPoint from_rationals(const Rational& x, const Rational& y, const Rational& z);
  static ProjPoint from_affine(const Point& p);

  const mpz_class& x() const { return x_; }
  const mpz_class& y() const { return y_; }
  const mpz_class& z() const { return z_; }

  bool at_infinity() const { return z_ == 0; }
  std::optional<Point> affine() const;

  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return compare_triples(a.x_, a.y_, a.z_, b.x_, b.y_, b.z_);
  }

  std::size_t hash() const;

 private:
  mpz_class x_, y_, z_;
};

/// A point at infinity, kept as its own type so direction sets cannot be
/// mixed up with affine intersection points.
class Direction {
 public:
  /// Throws std::domain_error unless p is at infinity.
  explicit Direction(ProjPoint p);

  /// Direction of the vector q - p; throws std::domain_error when p == q.
  static Direction between(const Point& p, const Point& q);

  const ProjPoint& point() const { return p_; }

  /// dy/dx, or nullopt for the vertical direction.
  std::optional<Rational> slope() const;

  friend bool operator==(const Direction&, const Direction&) = default;
  friend std::strong_ordering operator<=>(const Direction& a, const Direction& b) { return a.p_ <=> b.p_; }

  std::size_t hash() const { return p_.hash(); }

 private:
  ProjPoint p_;
};

/**
 * Line a*x + b*y + c*z = 0 in canonical integer form.
 *
 * gcd(|a|,|b|,|c|) = 1 and the first nonzero coefficient is positive, so the
 * canonical triple is unique per geometric line. (0,0,1) is the line at
 * infinity.
 */
class PlanarLine {
 public:
  /// Throws std::domain_error when a = b = c = 0.
  PlanarLine(mpz_class a, mpz_class b, mpz_class c);

  static PlanarLine from_rationals(const Rational& a, const Rational& b, const Rational& c);
  static PlanarLine at_infinity();
  /// The line x = value.
  static PlanarLine vertical(const Rational& value);
  /// The line y = value.
  static PlanarLine horizontal(const Rational& value);
  /// The line y = slope * x + intercept.
  static PlanarLine with_slope(const Rational& slope, const Rational& intercept);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }

  bool is_at_infinity() const { return a_ == 0 && b_ == 0; }
  bool is_vertical() const { return b_ == 0 && a_ != 0; }
  bool is_horizontal() const { return a_ == 0 && b_ != 0; }

  /// nullopt for vertical lines and the line at infinity.
  std::optional<Rational> slope() const;
  /// Ordinate where the line meets x = 0; nullopt for vertical lines.
  std::optional<Rational> y_intercept() const;

  bool contains(const Point& p) const;
  bool contains(const ProjPoint& p) const;

  std::string str() const;

  friend bool operator==(const PlanarLine& l, const PlanarLine& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  friend std::strong_ordering operator<=>(const PlanarLine& l, const PlanarLine& m) {
    return compare_triples(l.a_, l.b_, l.c_, m.a_, m.b_, m.c_);
  }

  std::size_t hash() const;

 private:
  mpz_class a_, b_, c_;
};

/// Line through two distinct points; throws std::domain_error when p == q.
PlanarLine line_through(const Point& p, const Point& q);

/// Exact vanishing of the homogeneous 3x3 determinant. Coincident
/// arguments count as collinear.
bool collinear(const Point& p, const Point& q, const Point& r);

/// Projective intersection of two distinct lines; parallel affine lines
/// meet at their common direction. Throws std::domain_error when l1 == l2.
ProjPoint intersect(const PlanarLine& l1, const PlanarLine& l2);

}  // namespace affine_lab

template <>
struct std::hash<affine_lab::Point> {
  std::size_t operator()(const affine_lab::Point& p) const noexcept { return affine_lab::hash_value(p); }
};
template <>
struct std::hash<affine_lab::ProjPoint> {
  std::size_t operator()(const affine_lab::ProjPoint& p) const noexcept { return p.hash(); }
};
template <>
struct std::hash<affine_lab::Direction> {
  std::size_t operator()(const affine_lab::Direction& d) const noexcept { return d.hash(); }
};
template <>
struct std::hash<affine_lab::PlanarLine> {
  std::size_t operator()(const affine_lab::PlanarLine& l) const noexcept { return l.hash(); }
};
