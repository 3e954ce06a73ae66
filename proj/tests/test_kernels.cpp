#include <doctest.h>

#include <omp.h>

#include "affine_lab/energy.hpp"
#include "affine_lab/expanders.hpp"
#include "affine_lab/families.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/reference.hpp"
#include "oracles.hpp"

using namespace affine_lab;

namespace {
std::vector<Count> profile_counts(const LineProfile& p) {
  std::vector<Count> out;
  for (const auto& e : p.entries()) out.push_back(e.multiplicity);
  return out;
}
std::vector<PlanarLine> profile_lines(const LineProfile& p) {
  std::vector<PlanarLine> out;
  for (const auto& e : p.entries()) out.push_back(e.line);
  return out;
}
}  // namespace

TEST_CASE("parallel kernels match the serial references") {
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    oracle::Random rng(900 + threads);
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet p(rng.points(5 + rng.index(40), 6));
      const LineProfile fast = line_profile(p), slow = serial::line_profile(p);
      CHECK(profile_lines(fast) == profile_lines(slow));
      CHECK(profile_counts(fast) == profile_counts(slow));
      CHECK(directions(p) == serial::directions(p));

      const auto lines = rng.lines(60, trial % 3 == 0 ? 3 : 9);
      CHECK(energy(lines) == serial::energy(lines));
      CHECK(count_incidences(p, std::span<const AffLine>(lines)) ==
            serial::count_incidences(p, std::span<const AffLine>(lines)));

      const ScalarSet a = rng.set(1, 12, [&] { return rng.rational(10); });
      CHECK(intercept_set(a) == serial::intercept_set(a));
    }
  }
}

TEST_CASE("energy of structured families with many slope collisions") {
  ScalarSet a;
  for (long i = 1; i <= 12; ++i) a.emplace_back(i);
  for (auto kind : {FamilyKind::ReciprocalDifference, FamilyKind::ShiftedProduct, FamilyKind::Grid}) {
    const Family f = build_family({kind, a, a, Rational(1), Rational(1), std::nullopt});
    CHECK(energy(f.lines) == serial::energy(f.lines));
  }
}
