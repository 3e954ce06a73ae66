#include <doctest.h>

#include <stdexcept>

#include "affine_lab/projective.hpp"
#include "oracles.hpp"

using namespace affine_lab;

namespace {
Rational frac(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }
ScalarSet set(std::initializer_list<long> xs) {
  ScalarSet out;
  for (long x : xs) out.emplace_back(x);
  return make_set(out);
}
Matrix3 scaled(const Matrix3& m, const Rational& k) {
  Matrix3 out = m;
  for (auto& row : out)
    for (auto& x : row) x *= k;
  return out;
}
Matrix3 random_invertible(oracle::Random& rng) {
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& x : row) x = Rational(rng.integer(-4, 4));
    try {
      ProjTransform t(m);
      return m;
    } catch (const std::domain_error&) {
    }
  }
}
}  // namespace

TEST_CASE("identity and scaling") {
  const ProjTransform id = ProjTransform::identity();
  const ProjPoint p(3, -1, 2);
  const PlanarLine l(1, 2, -5);
  CHECK(id.apply(p) == p);
  CHECK(id.apply(l) == l);
  const ProjTransform twice(scaled(identity_matrix(), Rational(2)));
  CHECK(twice.apply(p) == p);
  CHECK(twice.apply(l) == l);
  CHECK(twice.determinant() == Rational(8));
}

TEST_CASE("singular matrices are rejected") {
  Matrix3 m = identity_matrix();
  m[2] = m[1];
  CHECK_THROWS_AS(ProjTransform{m}, std::domain_error);
}

TEST_CASE("slope pencil transform") {
  const ProjTransform t = slope_pencil_transform(2, 5);
  CHECK(t.apply(ProjPoint(1, 2, 0)) == ProjPoint(0, 1, 0));
  CHECK(t.apply(ProjPoint(0, 1, 0)) == ProjPoint(0, 0, 1));
  CHECK(t.apply(ProjPoint(0, 5, 1)) == ProjPoint(1, 0, 0));
  CHECK_THROWS_AS(slope_pencil_transform(0, 1), std::domain_error);
}

TEST_CASE("horizontal pencil transform") {
  const Rational alpha = 2, beta = 3, gamma = -1;
  const ProjTransform t = horizontal_pencil_transform(alpha, beta, gamma);
  CHECK(t.apply(ProjPoint(1, 0, 0)) == ProjPoint(1, 0, 0));
  const ProjPoint meet = intersect(PlanarLine::horizontal(alpha), PlanarLine::with_slope(beta, gamma));
  CHECK(t.apply(meet) == ProjPoint(0, 1, 0));
  CHECK(t.apply(ProjPoint(1, 3, 0)) == ProjPoint(0, 0, 1));
  // y = b goes to y = β/(b − α)
  const Rational b = 7;
  CHECK(t.apply(PlanarLine::horizontal(b)) == PlanarLine::horizontal(beta / (b - alpha)));
  CHECK(t.apply(PlanarLine::horizontal(alpha)) == PlanarLine::at_infinity());
  CHECK_THROWS_AS(horizontal_pencil_transform(1, 0, 1), std::domain_error);
}

TEST_CASE("grid image matches the transform") {
  const ScalarSet a = set({1, 2, 4}), b = set({0, 3, 5});
  const Rational alpha = 1, beta = frac(1, 2), gamma = 3;
  const PointSet img = grid_image(a, b, alpha, beta, gamma);
  CHECK(img.size() == a.size() * b.size());
  const ProjTransform t = horizontal_pencil_transform(alpha, beta, gamma);
  const auto mapped = t.apply(PointSet::grid(a, b));
  std::set<Point> want;
  for (const auto& p : mapped) want.insert(*p.affine());
  CHECK(std::set<Point>(img.points().begin(), img.points().end()) == want);
  for (const auto& p : img.points()) {
    // (a'b' − 1, b') with a' ∈ A + (γ − α)/β
    const Rational a_shift = (p.x + 1) / p.y;
    CHECK(set_contains(a, a_shift - (gamma - alpha) / beta));
  }
  CHECK_THROWS_AS(grid_image(a, b, 3, beta, gamma), std::domain_error);
  CHECK_THROWS_AS(grid_image(a, b, alpha, 0, gamma), std::domain_error);
}

TEST_CASE("pencil image and dual lines") {
  const PointSet one = pencil_image(set({2}), set({1}), 1);
  REQUIRE(one.size() == 1);
  CHECK(one.points()[0] == Point{1, 2});
  CHECK(pencil_image(set({1, 2}), set({1}), 1).size() == 1);
  CHECK_THROWS_AS(pencil_image(set({1}), set({2}), 0), std::domain_error);

  const Rational alpha = 3;
  const ScalarSet a = set({1, 4, 6}), b = set({-2, 0, 2});
  const LineSet dual = dual_lines(pencil_image(a, b, alpha));
  std::set<AffLine> want;
  for (const auto& x : a)
    for (const auto& y : b) want.insert(AffLine(-alpha / (x - y), alpha * x / (x - y)));
  CHECK(LineSet(want.begin(), want.end()) == dual);
}

TEST_CASE("random transforms preserve incidence and collinearity") {
  oracle::Random rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const ProjTransform t(random_invertible(rng));
    const auto pts = rng.points(8, 4);
    std::vector<ProjPoint> proj, image;
    for (const auto& p : pts) {
      proj.push_back(ProjPoint::from_affine(p));
      image.push_back(t.apply(proj.back()));
    }
    std::vector<PlanarLine> lines, line_images;
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) lines.push_back(line_through(pts[i], pts[i + 1]));
    lines.push_back(PlanarLine::at_infinity());
    for (const auto& l : lines) line_images.push_back(t.apply(l));
    CHECK(count_incidences_projective(proj, lines) == count_incidences_projective(image, line_images));
    for (std::size_t i = 0; i < proj.size(); ++i)
      for (const auto& l : lines) CHECK(l.contains(proj[i]) == t.apply(l).contains(image[i]));
    for (std::size_t i = 0; i + 2 < proj.size(); ++i) {
      CHECK((oracle::det(proj[i], proj[i + 1], proj[i + 2]) == 0) ==
            (oracle::det(image[i], image[i + 1], image[i + 2]) == 0));
    }
    CHECK(t.apply(PointSet(pts)).size() == pts.size());
  }
}
