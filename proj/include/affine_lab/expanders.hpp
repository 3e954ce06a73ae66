#pragma once

#include <optional>

#include "affine_lab/rational.hpp"

namespace affine_lab {

ScalarSet sumset(const ScalarSet& a, const ScalarSet& b);
ScalarSet productset(const ScalarSet& a, const ScalarSet& b);

ScalarSet product_plus_set(const ScalarSet& a);        // AA + A
ScalarSet fourfold_sum_product_set(const ScalarSet& a);  // A(A + A + A + A)
ScalarSet triple_product_set(const ScalarSet& a);      // AAA

/// {(a1 a4 − a2 a3)/(a1 − a3) : a_i ∈ A, a1 ≠ a3}: the y-intercepts of the
/// non-vertical lines spanned by A × A, enumerated over point pairs.
ScalarSet intercept_set(const ScalarSet& a);

/// {(a1 − a2) a3 + a1 : a_i ∈ A}.
ScalarSet three_variable_expander(const ScalarSet& a);

struct GrowthStats {
  std::size_t size_a = 0;
  std::optional<std::size_t> size_b;
  std::size_t sumset_size = 0;      // |A+A|
  std::size_t productset_size = 0;  // |AA|
  std::optional<std::size_t> cross_product_size;  // |AB|
  Rational doubling;                      // K = |A+A|/|A|
  std::optional<Rational> multiplicative_ratio;  // K* = |A|³/E*(A), when 0 ∉ A
};

/// Requires a nonempty A.
GrowthStats growth_stats(const ScalarSet& a, const std::optional<ScalarSet>& b = std::nullopt);

}  // namespace affine_lab
