#pragma once

#include <optional>
#include <span>
#include <vector>

#include "affine_lab/affine_line.hpp"
#include "affine_lab/geometry.hpp"
#include "affine_lab/rational.hpp"

namespace affine_lab {

/**
 * Finite, duplicate-free set of affine points.
 *
 * Points are kept sorted by (x, y), so each vertical column of the set is a
 * contiguous run; count_on() uses that to test a line against the set in
 * O(#columns * log) instead of O(|P|).
 */
class PointSet {
 public:
  struct Grid {
    ScalarSet xs;
    ScalarSet ys;
  };

  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  /// Cartesian product xs × ys, remembering the factors.
  static PointSet grid(ScalarSet xs, ScalarSet ys);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::optional<Grid>& grid_factors() const { return grid_; }

  bool contains(const Point& p) const;

  /// |line ∩ P|. The line at infinity contains no affine point.
  Count count_on(const PlanarLine& line) const;

 private:
  struct Column {
    Rational x;
    std::size_t begin;
    std::size_t end;
  };

  void index_columns();

  std::vector<Point> points_;
  std::vector<Column> columns_;
  std::optional<Grid> grid_;
};

/// Every line spanned by at least two points, with its exact point count.
class LineProfile {
 public:
  struct Entry {
    PlanarLine line;
    Count multiplicity;
  };

  LineProfile() = default;
  explicit LineProfile(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Points on `line`, or 0 when the line is not spanned (fewer than two).
  Count multiplicity(const PlanarLine& line) const;

 private:
  std::vector<Entry> entries_;  // sorted by line
};

Count count_incidences(const PointSet& points, std::span<const PlanarLine> lines);
Count count_incidences(const PointSet& points, std::span<const AffLine> lines);

/// Brute-force projective incidence count: pairs with a dot product of zero.
Count count_incidences_projective(std::span<const ProjPoint> points, std::span<const PlanarLine> lines);

/// L(P) with multiplicities. Sets with fewer than two points span nothing.
LineProfile line_profile(const PointSet& points);

/// Lines with at least k points; k must be >= 2.
std::vector<PlanarLine> rich_lines(const LineProfile& profile, Count k);
std::vector<PlanarLine> rich_lines(const PointSet& points, Count k);

/// Σ |l ∩ P|^4 over spanned lines.
Count fourth_moment(const LineProfile& profile);
Count fourth_moment(const PointSet& points);

/// Σ |l∩P1|²·|l∩P2|² split by how rich each side is. Only lines spanned by
/// at least one of the two sets take part.
struct MixedMoments {
  Count total = 0;        // every line with max(|l∩P1|, |l∩P2|) >= 2
  Count doubly_rich = 0;  // |l∩P1| >= 2 and |l∩P2| >= 2
  Count first_rich_only = 0;   // |l∩P1| >= 2, |l∩P2| == 1
  Count second_rich_only = 0;  // |l∩P1| == 1, |l∩P2| >= 2
};

MixedMoments mixed_moments(const PointSet& first, const PointSet& second);
Count mixed_moment(const PointSet& first, const PointSet& second);

/// Sorted set of directions spanned by pairs of points.
std::vector<Direction> directions(const PointSet& points);

/// L(P) ∩ l, computed projectively. `infinite` is set when l itself carries
/// two or more points of P (then l ∈ L(P) and the trace is the whole line);
/// the listed points are still the intersections with every other spanned
/// line.
struct Trace {
  bool infinite = false;
  std::vector<ProjPoint> points;  // sorted, distinct
  std::size_t affine_count = 0;   // points with z != 0

  std::size_t projective_count() const { return points.size(); }
  std::vector<Point> affine_points() const;
};

Trace trace_on_line(const PointSet& points, const PlanarLine& line);
Trace trace_on_line(const PointSet& points, const LineProfile& profile, const PlanarLine& line);

}  // namespace affine_lab
