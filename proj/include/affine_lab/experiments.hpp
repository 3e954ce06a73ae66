#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affine_lab/affine_line.hpp"
#include "affine_lab/decimal.hpp"
#include "affine_lab/energy.hpp"
#include "affine_lab/generators.hpp"
#include "affine_lab/geometry.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/json_io.hpp"
#include "affine_lab/rational.hpp"

namespace affine_lab {

// ---------------------------------------------------------------- reports

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExponentFit {
  std::vector<std::pair<Count, Count>> samples;  // (n, value)
  std::string exponent;                          // least-squares slope, 4 places
};

/**
 * Output record of every checker. Integers are exact and emitted as
 * decimal strings; bound values with fractional exponents are decimals.
 * A report passes when all of its checks pass; warnings never fail it.
 */
struct ExperimentReport {
  std::string experiment;
  Json instance = Json::object();
  Json measured = Json::object();
  Json details = Json::object();
  std::optional<std::string> bound_expression;
  std::optional<std::string> bound;
  std::optional<std::string> ratio;  // measured / bound
  std::optional<ExponentFit> fit;
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  bool passed() const;
  void add_check(std::string name, bool passed, std::string detail = {});
  void set_measured(const std::string& key, Count value);
  void set_measured(const std::string& key, const mpz_class& value);

  Json to_json() const;
  /// Two columns, quantity,value: the measured integers, then bound and ratio.
  std::string to_csv() const;
};

enum class WindowPolicy { Warn, Error };
WindowPolicy parse_window_policy(std::string_view name);

struct CheckOptions {
  int digits = kDefaultSignificantDigits;
  std::size_t naive_cap = kDefaultNaiveCap;
  WindowPolicy window_policy = WindowPolicy::Warn;
};

// ---------------------------------------------------------------- rich ratios

/**
 * n(α) = #{(c, c', d) ∈ C × C × D : α = (c' − c)/(d(c − λ) − μ)} for α ≠ 0,
 * with triples whose denominator vanishes skipped.
 */
struct RichRatioProfile {
  std::vector<std::pair<Rational, Count>> counts;  // α ≠ 0, sorted by α
  Count zero_ratio_triples = 0;  // triples giving α = 0 (c' = c)
  Count skipped_triples = 0;     // zero denominator
  Count total = 0;               // Σ_{α≠0} n(α)
  Count sum_of_squares = 0;      // N = Σ_{α≠0} n(α)²
  Count max_count = 0;
  Count ceiling = 0;             // min(|C|², |C||D|)
  bool ceiling_applies = false;  // λ ∉ C; otherwise one c can pair with every d

  /// Λ_t = {α ≠ 0 : n(α) ≥ t}, sorted.
  std::vector<Rational> rich_values(Count t) const;
};

RichRatioProfile rich_ratio_profile(const ScalarSet& c, const ScalarSet& d, const Rational& lambda, const Rational& mu);

/// Profile plus the exact checks on it: the n(α) ceiling, the squared
/// comparison min(|C|², |C||D|)² ≤ |C|³|D|, Λ_t nesting and vanishing, and
/// at small sizes N against a direct count over 6-tuples.
ExperimentReport diag_rich_ratios(const ScalarSet& c, const ScalarSet& d, const Rational& lambda, const Rational& mu,
                                  const CheckOptions& options = {});

// ---------------------------------------------------------------- checkers

/// Energy of the reciprocal-difference family (λ/(c−d), μc/(c−d)) against
/// |C|^{5/2}|D|^{5/2} + |C|⁴ + |D|⁴. Asserts E ≤ |C|²|D|² + Σ_l |l∩C²|²|l∩D²|²
/// and the Cauchy–Schwarz step on doubly rich lines, plus E = naive E up
/// to the naive cap.
ExperimentReport check_reciprocal_difference_energy(const ScalarSet& c, const ScalarSet& d, const Rational& lambda,
                                                    const Rational& mu, const CheckOptions& options = {});

/// Energy of the shifted-product family (d(c−λ)−μ, c) against
/// |C|³|D|^{5/2} + |C|²|D|³. Splits E into solutions with equal intercepts
/// in the first pair and the rest, and asserts the first is at most
/// |C|²|D|³ and the rest at most N·|D| (when λ ∉ C).
ExperimentReport check_shifted_product_energy(const ScalarSet& c, const ScalarSet& d, const Rational& lambda,
                                              const Rational& mu, const CheckOptions& options = {});

/// I(A × B, L) against |B|^{1/2}|A|^{2/3}E(L)^{1/6}|L|^{1/3} + |B|^{1/2}|L|;
/// asserts I equals the pairwise count.
ExperimentReport check_grid_incidences(const ScalarSet& a, const ScalarSet& b, const LineSet& lines,
                                       const CheckOptions& options = {});

/// The same check on P = (A+A) × (AB) with the lines y = c(x − d), c ∈ B,
/// d ∈ A, which must carry at least |A|²·|B \ {0}| incidences.
ExperimentReport check_sum_product_incidences(const ScalarSet& a, const ScalarSet& b, const CheckOptions& options = {});

/// Traces of L(P) on two distinct lines. For grids, also reports the
/// lower-bound expression that applies to the pair of lines and whether
/// the size window holds (Warn or Error per the options).
ExperimentReport check_two_line_traces(const PointSet& points, const PlanarLine& first, const PlanarLine& second,
                                       const CheckOptions& options = {});

/// E(L) for L = {(a, b) : a, b ∈ A} against E₄*(A)·Q(A), by squaring.
ExperimentReport check_product_grid_energy(const ScalarSet& a, const CheckOptions& options = {});

// ---------------------------------------------------------------- fits and sweeps

/// Least-squares slope of log₂(value) on log₂(n). Needs at least three
/// samples with strictly increasing n and positive values.
Decimal fit_slope(const std::vector<std::pair<Count, Count>>& samples);

/// fit_slope rounded to 4 decimal places.
std::string fit_exponent(const std::vector<std::pair<Count, Count>>& samples);

enum class SweepKind {
  ReciprocalDifferenceEnergy,  // thm2
  ShiftedProductEnergy,        // thm3
  InterceptSet,                // q
  ThreeVariable,               // s14
  ProductPlus,                 // aa-plus-a
  FourfoldSum,                 // a-sum4
  TripleProduct,               // aaa
};

std::string_view sweep_kind_name(SweepKind kind);
SweepKind parse_sweep_kind(std::string_view name);

struct SweepSpec {
  SweepKind kind = SweepKind::ReciprocalDifferenceEnergy;
  std::vector<std::size_t> sizes;
  /// Template for the input set; n is replaced by each size. For
  /// random_int a range of 0 means 4n².
  GenSpec set;
  Rational lambda = Rational(1);
  Rational mu = Rational(1);
  bool timing = false;
  std::optional<Rational> expect_min;  // optional window on the fitted exponent
  std::optional<Rational> expect_max;
  CheckOptions options;
};

struct SweepRow {
  std::size_t n = 0;
  Count measured = 0;
  std::string bound;
  std::string ratio;
  std::optional<double> runtime_ms;
};

struct SweepResult {
  ExperimentReport report;
  std::vector<SweepRow> rows;

  /// Columns n,measured,bound,ratio,runtime_ms; runtime is empty unless timed.
  std::string to_csv() const;
};

SweepResult run_sweep(const SweepSpec& spec);

}  // namespace affine_lab
