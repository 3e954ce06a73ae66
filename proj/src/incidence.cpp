#include "affine_lab/incidence.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace affine_lab {

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  index_columns();
}

PointSet PointSet::grid(ScalarSet xs, ScalarSet ys) {
  xs = make_set(std::move(xs));
  ys = make_set(std::move(ys));
  std::vector<Point> pts;
  pts.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) pts.push_back({x, y});
  PointSet out(std::move(pts));
  out.grid_ = Grid{std::move(xs), std::move(ys)};
  return out;
}

void PointSet::index_columns() {
  columns_.clear();
  for (std::size_t i = 0; i < points_.size();) {
    std::size_t j = i;
    while (j < points_.size() && points_[j].x == points_[i].x) ++j;
    columns_.push_back({points_[i].x, i, j});
    i = j;
  }
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Count PointSet::count_on(const PlanarLine& line) const {
  if (line.is_at_infinity()) return 0;
  if (line.is_vertical()) {
    const Rational x(mpz_class(-line.c()), line.a());
    const auto it = std::lower_bound(columns_.begin(), columns_.end(), x,
                                     [](const Column& c, const Rational& v) { return c.x < v; });
    if (it == columns_.end() || it->x != x) return 0;
    return it->end - it->begin;
  }
  // b != 0: y = -(a*x + c)/b on each column.
  const Rational a(line.a()), b(line.b()), c(line.c());
  Count hits = 0;
  for (const auto& col : columns_) {
    const Point target{col.x, -(a * col.x + c) / b};
    if (std::binary_search(points_.begin() + static_cast<std::ptrdiff_t>(col.begin),
                           points_.begin() + static_cast<std::ptrdiff_t>(col.end), target)) {
      ++hits;
    }
  }
  return hits;
}

// ---------------------------------------------------------------- LineProfile

LineProfile::LineProfile(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& l, const Entry& r) { return l.line < r.line; });
}

Count LineProfile::multiplicity(const PlanarLine& line) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), line,
                                   [](const Entry& e, const PlanarLine& l) { return e.line < l; });
  return (it != entries_.end() && it->line == line) ? it->multiplicity : 0;
}

// ---------------------------------------------------------------- incidences

Count count_incidences(const PointSet& points, std::span<const PlanarLine> lines) {
  std::vector<PlanarLine> distinct(lines.begin(), lines.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  Count total = 0;
  const auto n = static_cast<std::ptrdiff_t>(distinct.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < n; ++i) total += points.count_on(distinct[static_cast<std::size_t>(i)]);
  return total;
}

Count count_incidences(const PointSet& points, std::span<const AffLine> lines) {
  std::vector<PlanarLine> planar;
  planar.reserve(lines.size());
  for (const auto& l : lines) planar.push_back(to_planar(l));
  return count_incidences(points, planar);
}

Count count_incidences_projective(std::span<const ProjPoint> points, std::span<const PlanarLine> lines) {
  Count total = 0;
  for (const auto& l : lines)
    for (const auto& p : points)
      if (l.contains(p)) ++total;
  return total;
}

// ---------------------------------------------------------------- profile

namespace {

struct AnchorGroup {
  Count others = 0;
  bool has_lower = false;
  std::size_t witness = 0;
};

}  // namespace

// Each spanned line is emitted exactly once: by its lowest-index point,
// which sees every other point of the line in a single direction bucket
// with no lower index in it.
LineProfile line_profile(const PointSet& set) {
  const auto& pts = set.points();
  const std::size_t n = pts.size();
  if (n < 2) return LineProfile{};

  std::vector<std::vector<LineProfile::Entry>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& out = partial[static_cast<std::size_t>(omp_get_thread_num())];
    std::unordered_map<Direction, AnchorGroup> groups;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      const auto i = static_cast<std::size_t>(si);
      groups.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        auto& g = groups[Direction::between(pts[i], pts[j])];
        ++g.others;
        g.witness = j;
        if (j < i) g.has_lower = true;
      }
      for (const auto& [dir, g] : groups) {
        if (!g.has_lower) out.push_back({line_through(pts[i], pts[g.witness]), g.others + 1});
      }
    }
  }

  std::vector<LineProfile::Entry> merged;
  for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(merged));
  return LineProfile(std::move(merged));
}

std::vector<PlanarLine> rich_lines(const LineProfile& profile, Count k) {
  if (k < 2) throw std::invalid_argument("rich_lines: k must be at least 2");
  std::vector<PlanarLine> out;
  for (const auto& e : profile.entries())
    if (e.multiplicity >= k) out.push_back(e.line);
  return out;
}

std::vector<PlanarLine> rich_lines(const PointSet& points, Count k) {
  return rich_lines(line_profile(points), k);
}

Count fourth_moment(const LineProfile& profile) {
  Count total = 0;
  for (const auto& e : profile.entries()) total = checked_add(total, checked_pow(e.multiplicity, 4));
  return total;
}

Count fourth_moment(const PointSet& points) { return fourth_moment(line_profile(points)); }

MixedMoments mixed_moments(const PointSet& first, const PointSet& second) {
  const LineProfile p1 = line_profile(first);
  const LineProfile p2 = line_profile(second);
  MixedMoments m;
  auto add = [&m](Count a, Count b) {
    const Count term = checked_mul(checked_mul(a, a), checked_mul(b, b));
    m.total = checked_add(m.total, term);
    if (a >= 2 && b >= 2) {
      m.doubly_rich = checked_add(m.doubly_rich, term);
    } else if (a >= 2 && b == 1) {
      m.first_rich_only = checked_add(m.first_rich_only, term);
    } else if (a == 1 && b >= 2) {
      m.second_rich_only = checked_add(m.second_rich_only, term);
    }
  };
  for (const auto& e : p1.entries()) {
    const Count b = p2.multiplicity(e.line);
    add(e.multiplicity, b != 0 ? b : second.count_on(e.line));
  }
  for (const auto& e : p2.entries()) {
    if (p1.multiplicity(e.line) != 0) continue;  // already counted above
    add(first.count_on(e.line), e.multiplicity);
  }
  return m;
}

Count mixed_moment(const PointSet& first, const PointSet& second) { return mixed_moments(first, second).total; }

// ---------------------------------------------------------------- directions

std::vector<Direction> directions(const PointSet& set) {
  const auto& pts = set.points();
  const std::size_t n = pts.size();
  std::vector<std::vector<Direction>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    std::unordered_set<Direction> local;
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      const auto i = static_cast<std::size_t>(si);
      for (std::size_t j = i + 1; j < n; ++j) local.insert(Direction::between(pts[i], pts[j]));
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())].assign(local.begin(), local.end());
  }
  std::vector<Direction> out;
  for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- traces

std::vector<Point> Trace::affine_points() const {
  std::vector<Point> out;
  for (const auto& p : points)
    if (auto a = p.affine()) out.push_back(std::move(*a));
  std::sort(out.begin(), out.end());
  return out;
}

Trace trace_on_line(const PointSet& points, const LineProfile& profile, const PlanarLine& line) {
  Trace t;
  t.infinite = points.count_on(line) >= 2;
  for (const auto& e : profile.entries()) {
    if (e.line == line) continue;
    t.points.push_back(intersect(e.line, line));
  }
  std::sort(t.points.begin(), t.points.end());
  t.points.erase(std::unique(t.points.begin(), t.points.end()), t.points.end());
  t.affine_count = static_cast<std::size_t>(
      std::count_if(t.points.begin(), t.points.end(), [](const ProjPoint& p) { return !p.at_infinity(); }));
  return t;
}

Trace trace_on_line(const PointSet& points, const PlanarLine& line) {
  return trace_on_line(points, line_profile(points), line);
}

}  // namespace affine_lab
