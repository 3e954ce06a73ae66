#pragma once

#include <span>
#include <vector>

#include "affine_lab/affine_line.hpp"
#include "affine_lab/geometry.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/rational.hpp"

/// Single-threaded, straightforward versions of the parallel kernels. They
/// are what the kernels are tested against and benchmarked against.
namespace affine_lab::serial {

/// Keys every unordered point pair on its canonical line.
LineProfile line_profile(const PointSet& points);

/// Tests every (point, line) pair.
Count count_incidences(const PointSet& points, std::span<const PlanarLine> lines);
Count count_incidences(const PointSet& points, std::span<const AffLine> lines);

std::vector<Direction> directions(const PointSet& points);

/// Σ r(g)² read off the full quotient multiset.
Count energy(std::span<const AffLine> lines);

/// Intercepts of lines through pairs of A × A, pair by pair.
ScalarSet intercept_set(const ScalarSet& a);

}  // namespace affine_lab::serial
