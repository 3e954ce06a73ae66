#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affine_lab/affine_line.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/rational.hpp"

namespace affine_lab {

/// Parametrized line families, each built from parameter pairs (c, d) ∈ C × D.
enum class FamilyKind {
  Grid,               // (c, d)
  GridProduct,        // (c, c·d), c ≠ 0
  ReciprocalDifference,  // (λ/(c−d), μ·c/(c−d)), c ≠ d
  ShiftedProduct,     // (d(c−λ) − μ, c), slope ≠ 0, c ≠ 0
  Difference,         // (c − d, c), c ≠ d, c ≠ 0
  Elekes,             // (c, −c·d): the line y = c(x − d), c ≠ 0
  Spanned,            // non-vertical, non-horizontal lines of L(P)
};

/// Wire names: grid_cd, grid_c_cd, thm2, thm3, diff, elekes, spanned.
std::string_view family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::Grid;
  ScalarSet c_values;
  ScalarSet d_values;
  Rational lambda;
  Rational mu;
  /// Point set for the Spanned kind; when absent, C × D is used.
  std::optional<PointSet> points;
};

struct ParameterPair {
  Rational c;
  Rational d;
};

struct FamilyCollision {
  ParameterPair params;
  AffLine line;
};

struct CollisionReport {
  std::size_t admitted = 0;  // pairs that produced a line
  std::size_t skipped = 0;   // pairs violating a side condition
  std::vector<FamilyCollision> collisions;  // admitted pairs whose line was already present
};

struct Family {
  LineSet lines;
  /// params[i] is the first (c, d) pair, in sorted C-major order, that
  /// produced lines[i]. Empty for the Spanned kind.
  std::vector<ParameterPair> params;
  CollisionReport report;
};

/**
 * Builds the deduplicated line set of a family.
 *
 * Pairs that violate the kind's side conditions (c = d, a zero slope, a
 * zero denominator) are skipped and counted; they never raise. Throws
 * std::invalid_argument for an empty C or D (except Spanned with explicit
 * points) and for the ReciprocalDifference kind with λ = 0 or μ = 0.
 *
 * For ReciprocalDifference, and for ShiftedProduct when no c equals λ, the
 * parametrization is injective; the builder checks that no collision was
 * recorded and throws std::logic_error otherwise.
 */
Family build_family(const FamilySpec& spec);

/// Elementwise group inverse, as a sorted set of the same size.
LineSet family_inverse(const LineSet& lines);

}  // namespace affine_lab
