#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "affine_lab/affine_line.hpp"
#include "affine_lab/rational.hpp"

namespace affine_lab {

inline constexpr std::size_t kDefaultNaiveCap = 64;

/// r(g) = #{(l1, l2) ∈ L × L : l1^{-1} l2 = g} over all ordered pairs.
class QuotientMultiset {
 public:
  using Entry = std::pair<AffLine, Count>;

  QuotientMultiset() = default;
  explicit QuotientMultiset(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  Count multiplicity(const AffLine& g) const;
  Count total() const;   // |L|²
  Count energy() const;  // Σ r(g)²

 private:
  std::vector<Entry> entries_;  // sorted by g
};

/// Duplicate lines in the input are collapsed first: L is a set.
QuotientMultiset quotient_multiset(std::span<const AffLine> lines);

/**
 * E(L) = Σ_g r(g)², parallel over slope-ratio classes.
 *
 * The slope of l1^{-1} l2 is m2/m1, so ordered pairs only collide when
 * their slope pairs share a ratio. Slope pairs are bucketed by ratio and
 * each bucket counts its intercepts (c2 − c1)/m1 in a private hash map;
 * buckets are independent and the per-bucket sums of squares add up to E.
 */
Count energy(std::span<const AffLine> lines);

/// Counts ordered quadruples with l1^{-1} l2 = l3^{-1} l4 one by one.
/// Throws std::length_error when |L| exceeds `cap`.
Count energy_naive(std::span<const AffLine> lines, std::size_t cap = kDefaultNaiveCap);

/// E⁺(A) = #{(a, b, c, d) ∈ A⁴ : a + b = c + d}.
Count additive_energy(const ScalarSet& a);

/// E_k*(A) = Σ_λ r_{A/A}(λ)^k. Throws std::invalid_argument when 0 ∈ A or k < 2.
Count multiplicative_energy(const ScalarSet& a, unsigned k = 2);

/// Σ_λ q(λ)² with q(λ) = #{(a1, a2, a3, a4) : a3 ≠ a4, a1 − a2 = λ(a3 − a4)}.
/// Zero numerators (λ = 0) count, zero denominators do not.
Count difference_ratio_energy(const ScalarSet& a);

/// Number of (a1, ..., a8) ∈ A⁸ with (a1 − a2)(a7 − a8) = (a5 − a6)(a3 − a4):
/// the ratio equation in cross-multiplied form, degenerate tuples included.
Count difference_product_energy(const ScalarSet& a);

/// E(L), E₄*(A), and both ratio counts for the line grid {y = a x + b : a, b ∈ A}.
struct ProductGridEnergyCheck {
  std::size_t lines = 0;
  Count energy = 0;
  Count fourth_multiplicative_energy = 0;
  Count ratio_energy = 0;    // difference_ratio_energy(A)
  Count product_energy = 0;  // difference_product_energy(A)
  bool holds_with_product_energy = false;  // E² ≤ E₄*·(cross-multiplied count)
  bool holds_with_ratio_energy = false;    // E² ≤ E₄*·(zero-denominator-free count)
};

/// Throws std::invalid_argument when 0 ∈ A.
ProductGridEnergyCheck product_grid_energy_check(const ScalarSet& a);

}  // namespace affine_lab
