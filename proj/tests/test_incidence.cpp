#include <doctest.h>

#include <stdexcept>

#include "affine_lab/incidence.hpp"
#include "oracles.hpp"

using namespace affine_lab;

namespace {
Point pt(long x, long y) { return {Rational(x), Rational(y)}; }
Rational frac(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }
ScalarSet range(long lo, long hi) {
  ScalarSet out;
  for (long x = lo; x <= hi; ++x) out.emplace_back(x);
  return out;
}
PointSet square(long n) { return PointSet::grid(range(0, n - 1), range(0, n - 1)); }
}  // namespace

TEST_CASE("point sets deduplicate and remember grid factors") {
  const PointSet p({pt(1, 1), pt(0, 0), pt(1, 1)});
  CHECK(p.size() == 2);
  CHECK(p.contains(pt(0, 0)));
  CHECK_FALSE(p.grid_factors().has_value());
  const PointSet g = square(3);
  CHECK(g.size() == 9);
  REQUIRE(g.grid_factors().has_value());
  CHECK(g.grid_factors()->xs.size() == 3);
  CHECK(g.count_on(PlanarLine::vertical(1)) == 3);
  CHECK(g.count_on(PlanarLine::with_slope(1, 0)) == 3);
  CHECK(g.count_on(PlanarLine::at_infinity()) == 0);
}

TEST_CASE("incidence counts") {
  const PointSet g2 = square(2);
  const LineSet diag{AffLine(1, 0)};
  CHECK(count_incidences(g2, std::span<const AffLine>(diag)) == 2);
  const LineSet two{AffLine(1, 0), AffLine(1, 5)};
  CHECK(count_incidences(g2, std::span<const AffLine>(two)) == 2);
  const LineSet cross{AffLine(1, 0), AffLine(-1, 2)};
  CHECK(count_incidences(square(3), std::span<const AffLine>(cross)) == 6);
  const std::vector<PlanarLine> axes{PlanarLine::vertical(0), PlanarLine::horizontal(0), PlanarLine::at_infinity()};
  CHECK(count_incidences(square(3), std::span<const PlanarLine>(axes)) == 6);
}

TEST_CASE("line profiles of small grids") {
  const LineProfile p2 = line_profile(square(2));
  CHECK(p2.size() == 6);
  for (const auto& e : p2.entries()) CHECK(e.multiplicity == 2);

  const LineProfile col = line_profile(PointSet({pt(0, 0), pt(1, 1), pt(2, 2)}));
  REQUIRE(col.size() == 1);
  CHECK(col.entries()[0].multiplicity == 3);
  CHECK(fourth_moment(col) == 81);

  const LineProfile p3 = line_profile(square(3));
  CHECK(p3.size() == 20);
  std::size_t triples = 0, pairs = 0;
  Count pair_sum = 0;
  for (const auto& e : p3.entries()) {
    (e.multiplicity == 3 ? triples : pairs) += 1;
    pair_sum += e.multiplicity * (e.multiplicity - 1) / 2;
  }
  CHECK(triples == 8);
  CHECK(pairs == 12);
  CHECK(pair_sum == 36);
  CHECK(p3.multiplicity(PlanarLine::with_slope(1, 0)) == 3);
  CHECK(p3.multiplicity(PlanarLine::with_slope(5, 0)) == 0);

  CHECK(line_profile(PointSet({pt(1, 1)})).size() == 0);
  CHECK(line_profile(PointSet()).size() == 0);
}

TEST_CASE("rich lines") {
  const PointSet g = square(3);
  CHECK(rich_lines(g, 3).size() == 8);
  CHECK(rich_lines(g, 4).empty());
  CHECK(rich_lines(g, 2).size() == line_profile(g).size());
  CHECK_THROWS_AS(rich_lines(g, 1), std::invalid_argument);
}

TEST_CASE("fourth moments of n x n grids") {
  const Count expected[] = {96, 840, 3652, 11548};
  const std::size_t lines[] = {6, 20, 62, 140};
  for (long n = 2; n <= 5; ++n) {
    const PointSet g = square(n);
    CHECK(fourth_moment(g) == expected[n - 2]);
    CHECK(line_profile(g).size() == lines[n - 2]);
    CHECK(fourth_moment(g) == oracle::fourth_moment(g.points()));
  }
}

TEST_CASE("mixed moments") {
  const PointSet g = square(2);
  CHECK(mixed_moment(g, g) == 96);
  const MixedMoments m = mixed_moments(PointSet({pt(0, 0), pt(1, 0)}), PointSet({pt(5, 0)}));
  CHECK(m.total == 4);
  CHECK(m.first_rich_only == 4);
  CHECK(m.doubly_rich == 0);
  CHECK(m.second_rich_only == 0);
  const MixedMoments far = mixed_moments(PointSet({pt(0, 0), pt(1, 0)}), PointSet({pt(0, 7), pt(1, 9)}));
  CHECK(far.total == 0);
}

TEST_CASE("directions") {
  CHECK(directions(PointSet({pt(0, 0), pt(1, 0), pt(0, 1)})).size() == 3);
  CHECK(directions(PointSet({pt(0, 0), pt(1, 0), pt(2, 0)})).size() == 1);
  const auto d = directions(PointSet({pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 3)}));
  REQUIRE(d.size() == 6);
  std::set<std::optional<Rational>> slopes;
  for (const auto& x : d) slopes.insert(x.slope());
  const std::set<std::optional<Rational>> want{Rational(0), std::nullopt, frac(3, 2), Rational(-1), Rational(3),
                                               Rational(1)};
  CHECK(slopes == want);
}

TEST_CASE("traces") {
  const PointSet g = square(2);
  const Trace inf = trace_on_line(g, PlanarLine::at_infinity());
  CHECK(inf.projective_count() == 4);
  CHECK(inf.affine_count == 0);
  CHECK_FALSE(inf.infinite);

  const Trace left = trace_on_line(g, PlanarLine::vertical(-1));
  CHECK(left.affine_count == 4);
  CHECK(left.projective_count() == 5);
  const std::vector<Point> want{pt(-1, -1), pt(-1, 0), pt(-1, 1), pt(-1, 2)};
  CHECK(left.affine_points() == want);

  const Trace col = trace_on_line(PointSet({pt(0, 0), pt(1, 1), pt(2, 2)}), PlanarLine::vertical(7));
  CHECK(col.projective_count() == 1);

  const Trace axis = trace_on_line(g, PlanarLine::vertical(0));
  CHECK(axis.infinite);
}

TEST_CASE("random sets agree with the pairwise oracles") {
  oracle::Random rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet p(rng.points(2 + rng.index(12), 4));
    const auto prof = line_profile(p);
    const auto want = oracle::profile(p.points());
    REQUIRE(prof.size() == want.size());
    for (const auto& e : prof.entries()) CHECK(want.at(e.line) == e.multiplicity);

    const auto dirs = directions(p);
    CHECK(dirs.size() == oracle::directions(p.points()).size());

    const PointSet q(rng.points(1 + rng.index(8), 4));
    const MixedMoments m = mixed_moments(p, q);
    CHECK(m.total == oracle::mixed_moment(p.points(), q.points()));
    CHECK(m.total == m.doubly_rich + m.first_rich_only + m.second_rich_only);

    const auto lines = rng.lines(10, 4);
    CHECK(count_incidences(p, std::span<const AffLine>(lines)) == oracle::incidences(p.points(), lines));

    const PlanarLine target = rng.coin() ? PlanarLine::at_infinity() : PlanarLine::with_slope(rng.rational(3), rng.rational(3));
    const Trace t = trace_on_line(p, target);
    const auto tw = oracle::trace(p.points(), target);
    CHECK(std::set<ProjPoint>(t.points.begin(), t.points.end()) == tw);
    CHECK(t.infinite == (p.count_on(target) >= 2));
  }
}
