#include "affine_lab/geometry.hpp"

#include <stdexcept>

namespace affine_lab {

namespace {

std::strong_ordering to_ordering(int c) {
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// Divides out the content and makes the first nonzero entry positive.
void canonicalize(mpz_class& a, mpz_class& b, mpz_class& c, const char* what) {
  if (a == 0 && b == 0 && c == 0) throw std::domain_error(std::string("zero homogeneous triple for ") + what);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  const int lead = a != 0 ? sgn(a) : (b != 0 ? sgn(b) : sgn(c));
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
}

// Integer triple proportional to (a, b, c).
void clear_denominators(const Rational& a, const Rational& b, const Rational& c, mpz_class& ia,
                        mpz_class& ib, mpz_class& ic) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  ia = a.num() * (l / a.den());
  ib = b.num() * (l / b.den());
  ic = c.num() * (l / c.den());
}

std::size_t hash_triple(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  return hash_combine(hash_combine(hash_mpz(a), hash_mpz(b)), hash_mpz(c));
}

}  // namespace

std::size_t hash_value(const Point& p) { return hash_combine(p.x.hash(), p.y.hash()); }

std::strong_ordering compare_triples(const mpz_class& a0, const mpz_class& a1, const mpz_class& a2,
                                     const mpz_class& b0, const mpz_class& b1, const mpz_class& b2) {
  if (int c = cmp(a0, b0); c != 0) return to_ordering(c);
  if (int c = cmp(a1, b1); c != 0) return to_ordering(c);
  return to_ordering(cmp(a2, b2));
}

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(mpz_class x, mpz_class y, mpz_class z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  canonicalize(x_, y_, z_, "projective point");
}

ProjPoint ProjPoint::from_rationals(const Rational& x, const Rational& y, const Rational& z) {
  mpz_class ix, iy, iz;
  clear_denominators(x, y, z, ix, iy, iz);
  return ProjPoint(std::move(ix), std::move(iy), std::move(iz));
}

ProjPoint ProjPoint::from_affine(const Point& p) { return from_rationals(p.x, p.y, Rational(1)); }

std::optional<Point> ProjPoint::affine() const {
  if (at_infinity()) return std::nullopt;
  return Point{Rational(x_, z_), Rational(y_, z_)};
}

std::string ProjPoint::str() const {
  return "[" + x_.get_str() + ":" + y_.get_str() + ":" + z_.get_str() + "]";
}

std::size_t ProjPoint::hash() const { return hash_triple(x_, y_, z_); }

// ---------------------------------------------------------------- Direction

Direction::Direction(ProjPoint p) : p_(std::move(p)) {
  if (!p_.at_infinity()) throw std::domain_error("direction must be a point at infinity");
}

Direction Direction::between(const Point& p, const Point& q) {
  if (p == q) throw std::domain_error("direction between equal points");
  return Direction(ProjPoint::from_rationals(q.x - p.x, q.y - p.y, Rational(0)));
}

std::optional<Rational> Direction::slope() const {
  if (p_.x() == 0) return std::nullopt;
  return Rational(p_.y(), p_.x());
}

// ---------------------------------------------------------------- PlanarLine

PlanarLine::PlanarLine(mpz_class a, mpz_class b, mpz_class c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  canonicalize(a_, b_, c_, "line");
}

PlanarLine PlanarLine::from_rationals(const Rational& a, const Rational& b, const Rational& c) {
  mpz_class ia, ib, ic;
  clear_denominators(a, b, c, ia, ib, ic);
  return PlanarLine(std::move(ia), std::move(ib), std::move(ic));
}

PlanarLine PlanarLine::at_infinity() { return PlanarLine(0, 0, 1); }

PlanarLine PlanarLine::vertical(const Rational& value) {
  return from_rationals(Rational(1), Rational(0), -value);
}

PlanarLine PlanarLine::horizontal(const Rational& value) {
  return from_rationals(Rational(0), Rational(1), -value);
}

PlanarLine PlanarLine::with_slope(const Rational& slope, const Rational& intercept) {
  return from_rationals(slope, Rational(-1), intercept);
}

std::optional<Rational> PlanarLine::slope() const {
  if (b_ == 0) return std::nullopt;
  return Rational(mpz_class(-a_), b_);
}

std::optional<Rational> PlanarLine::y_intercept() const {
  if (b_ == 0) return std::nullopt;
  return Rational(mpz_class(-c_), b_);
}

bool PlanarLine::contains(const Point& p) const {
  // a*x + b*y + c == 0 with x = xn/xd, y = yn/yd, scaled by xd*yd.
  const mpz_class lhs = a_ * p.x.num() * p.y.den() + b_ * p.y.num() * p.x.den() + c_ * p.x.den() * p.y.den();
  return lhs == 0;
}

bool PlanarLine::contains(const ProjPoint& p) const {
  return a_ * p.x() + b_ * p.y() + c_ * p.z() == 0;
}

std::string PlanarLine::str() const {
  return "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + ")";
}

std::size_t PlanarLine::hash() const { return hash_triple(a_, b_, c_); }

// ---------------------------------------------------------------- operations

PlanarLine line_through(const Point& p, const Point& q) {
  if (p == q) throw std::domain_error("line_through: equal points");
  // Cross product of (x1, y1, 1) and (x2, y2, 1).
  return PlanarLine::from_rationals(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).is_zero();
}

ProjPoint intersect(const PlanarLine& l1, const PlanarLine& l2) {
  if (l1 == l2) throw std::domain_error("intersect: identical lines");
  return ProjPoint(l1.b() * l2.c() - l1.c() * l2.b(), l1.c() * l2.a() - l1.a() * l2.c(),
                   l1.a() * l2.b() - l1.b() * l2.a());
}

}  // namespace affine_lab
