#include "affine_lab/reference.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "affine_lab/energy.hpp"

namespace affine_lab::serial {

LineProfile line_profile(const PointSet& set) {
  const auto& pts = set.points();
  std::map<PlanarLine, std::set<std::size_t>> on_line;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto& members = on_line[line_through(pts[i], pts[j])];
      members.insert(i);
      members.insert(j);
    }
  }
  std::vector<LineProfile::Entry> entries;
  entries.reserve(on_line.size());
  for (const auto& [line, members] : on_line) entries.push_back({line, members.size()});
  return LineProfile(std::move(entries));
}

Count count_incidences(const PointSet& points, std::span<const PlanarLine> lines) {
  std::vector<PlanarLine> distinct(lines.begin(), lines.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Count total = 0;
  for (const auto& l : distinct)
    for (const auto& p : points.points())
      if (l.contains(p)) ++total;
  return total;
}

Count count_incidences(const PointSet& points, std::span<const AffLine> lines) {
  std::vector<PlanarLine> planar;
  for (const auto& l : lines) planar.push_back(to_planar(l));
  return serial::count_incidences(points, std::span<const PlanarLine>(planar));
}

std::vector<Direction> directions(const PointSet& set) {
  const auto& pts = set.points();
  std::set<Direction> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.insert(Direction::between(pts[i], pts[j]));
  return {out.begin(), out.end()};
}

Count energy(std::span<const AffLine> lines) { return quotient_multiset(lines).energy(); }

ScalarSet intercept_set(const ScalarSet& input) {
  const ScalarSet a = make_set(input);
  std::set<Rational> out;
  for (const auto& x1 : a)
    for (const auto& y1 : a)
      for (const auto& x2 : a) {
        if (x2 <= x1) continue;
        for (const auto& y2 : a) out.insert((x1 * y2 - y1 * x2) / (x1 - x2));
      }
  return {out.begin(), out.end()};
}

}  // namespace affine_lab::serial
