#include "affine_lab/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace affine_lab {

std::string_view family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Grid: return "grid_cd";
    case FamilyKind::GridProduct: return "grid_c_cd";
    case FamilyKind::ReciprocalDifference: return "thm2";
    case FamilyKind::ShiftedProduct: return "thm3";
    case FamilyKind::Difference: return "diff";
    case FamilyKind::Elekes: return "elekes";
    case FamilyKind::Spanned: return "spanned";
  }
  throw std::logic_error("unknown family kind");
}

FamilyKind parse_family_kind(std::string_view name) {
  for (auto k : {FamilyKind::Grid, FamilyKind::GridProduct, FamilyKind::ReciprocalDifference,
                 FamilyKind::ShiftedProduct, FamilyKind::Difference, FamilyKind::Elekes, FamilyKind::Spanned}) {
    if (family_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown family kind '" + std::string(name) + "'");
}

namespace {

// Line for one parameter pair, or nullopt when a side condition fails.
std::optional<AffLine> member(const FamilySpec& spec, const Rational& c, const Rational& d) {
  auto make = [](Rational m, Rational b) -> std::optional<AffLine> {
    if (m.is_zero()) return std::nullopt;
    return AffLine(std::move(m), std::move(b));
  };
  switch (spec.kind) {
    case FamilyKind::Grid:
      return make(c, d);
    case FamilyKind::GridProduct:
      return make(c, c * d);
    case FamilyKind::ReciprocalDifference: {
      if (c == d) return std::nullopt;
      const Rational gap = c - d;
      return make(spec.lambda / gap, spec.mu * c / gap);
    }
    case FamilyKind::ShiftedProduct:
      if (c.is_zero()) return std::nullopt;
      return make(d * (c - spec.lambda) - spec.mu, c);
    case FamilyKind::Difference:
      if (c == d || c.is_zero()) return std::nullopt;
      return make(c - d, c);
    case FamilyKind::Elekes:
      return make(c, -(c * d));
    case FamilyKind::Spanned:
      break;
  }
  throw std::logic_error("member: unsupported kind");
}

bool parametrization_is_injective(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::ReciprocalDifference) return true;
  if (spec.kind == FamilyKind::ShiftedProduct) return !set_contains(spec.c_values, spec.lambda);
  return false;
}

Family build_spanned(const FamilySpec& spec) {
  const PointSet pts = spec.points ? *spec.points : PointSet::grid(spec.c_values, spec.d_values);
  const LineProfile profile = line_profile(pts);
  Family fam;
  for (const auto& e : profile.entries()) {
    if (auto l = AffLine::from_planar(e.line)) {
      fam.lines.push_back(std::move(*l));
      ++fam.report.admitted;
    } else {
      ++fam.report.skipped;
    }
  }
  fam.lines = make_line_set(std::move(fam.lines));
  return fam;
}

}  // namespace

Family build_family(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Spanned) {
    if (!spec.points && (spec.c_values.empty() || spec.d_values.empty())) {
      throw std::invalid_argument("build_family: spanned family needs points or nonempty C and D");
    }
    return build_spanned(spec);
  }
  if (spec.c_values.empty() || spec.d_values.empty()) {
    throw std::invalid_argument("build_family: C and D must be nonempty");
  }
  if (spec.kind == FamilyKind::ReciprocalDifference && (spec.lambda.is_zero() || spec.mu.is_zero())) {
    throw std::invalid_argument("build_family: thm2 family needs lambda != 0 and mu != 0");
  }

  const ScalarSet cs = make_set(spec.c_values);
  const ScalarSet ds = make_set(spec.d_values);

  Family fam;
  std::unordered_map<AffLine, std::size_t> seen;
  std::vector<std::pair<AffLine, ParameterPair>> firsts;
  for (const auto& c : cs) {
    for (const auto& d : ds) {
      auto line = member(spec, c, d);
      if (!line) {
        ++fam.report.skipped;
        continue;
      }
      ++fam.report.admitted;
      if (seen.contains(*line)) {
        fam.report.collisions.push_back({{c, d}, *line});
        continue;
      }
      seen.emplace(*line, firsts.size());
      firsts.push_back({std::move(*line), {c, d}});
    }
  }

  std::sort(firsts.begin(), firsts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  fam.lines.reserve(firsts.size());
  fam.params.reserve(firsts.size());
  for (auto& [line, params] : firsts) {
    fam.lines.push_back(std::move(line));
    fam.params.push_back(std::move(params));
  }

  if (parametrization_is_injective(spec) && !fam.report.collisions.empty()) {
    throw std::logic_error("build_family: injective parametrization produced a collision");
  }
  return fam;
}

LineSet family_inverse(const LineSet& lines) {
  std::vector<AffLine> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(inverse(l));
  return make_line_set(std::move(out));
}

}  // namespace affine_lab
