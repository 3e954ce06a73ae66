#include "affine_lab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "affine_lab/energy.hpp"
#include "affine_lab/expanders.hpp"
#include "affine_lab/families.hpp"
#include "affine_lab/reference.hpp"

namespace affine_lab {

namespace {

// Oracle-scale budgets for the brute-force cross-checks run inside checkers.
constexpr std::size_t kTupleOracleTriples = 2000;         // 6-tuple count: triples²
constexpr std::size_t kPairwiseIncidenceBudget = 20'000'000;  // |P|·|L|
constexpr std::size_t kPairwiseProfilePoints = 300;

mpz_class big(Count v) { return to_mpz(v); }

Decimal count_power(std::size_t n, const Rational& exponent) {
  return power(to_decimal(static_cast<Count>(n)), exponent);
}

Json set_json(const ScalarSet& s) { return to_json(s); }

std::string ratio_text(const Decimal& measured, const Decimal& bound, int digits) {
  if (bound == 0) return "inf";
  return format_decimal(measured / bound, digits);
}

void set_bound(ExperimentReport& r, std::string expression, const Decimal& bound, const Decimal& measured,
               int digits) {
  r.bound_expression = std::move(expression);
  r.bound = format_decimal(bound, digits);
  r.ratio = ratio_text(measured, bound, digits);
}

std::string le_detail(const mpz_class& lhs, const mpz_class& rhs) { return lhs.get_str() + " <= " + rhs.get_str(); }

// Σ r(g)² over quotients l1⁻¹l2 whose two lines share an intercept: those
// quotients have intercept 0 and slope m2/m1.
Count same_intercept_energy(const LineSet& lines) {
  std::map<Rational, std::vector<Rational>> slopes_by_intercept;
  for (const auto& l : lines) slopes_by_intercept[l.intercept()].push_back(l.slope());
  std::unordered_map<Rational, Count> r;
  for (const auto& [c, slopes] : slopes_by_intercept)
    for (const auto& m1 : slopes)
      for (const auto& m2 : slopes) ++r[m2 / m1];
  Count e = 0;
  for (const auto& [ratio, count] : r) e = checked_add(e, checked_mul(count, count));
  return e;
}

Count same_intercept_energy_naive(const LineSet& lines) {
  Count e = 0;
  for (const auto& l1 : lines)
    for (const auto& l2 : lines) {
      if (l1.intercept() != l2.intercept()) continue;
      const AffLine g = quotient(l1, l2);
      for (const auto& l3 : lines)
        for (const auto& l4 : lines)
          if (quotient(l3, l4) == g) ++e;
    }
  return e;
}

struct RatioTriple {
  Rational numerator;    // c' − c
  Rational denominator;  // d(c − λ) − μ
};

// N by comparing every pair of triples with nonzero numerator and denominator.
Count rich_ratio_squares_naive(const std::vector<RatioTriple>& triples) {
  Count n = 0;
  for (const auto& s : triples)
    for (const auto& t : triples)
      if (s.numerator * t.denominator == t.numerator * s.denominator) ++n;
  return n;
}

}  // namespace

// ---------------------------------------------------------------- reports

bool ExperimentReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void ExperimentReport::add_check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void ExperimentReport::set_measured(const std::string& key, Count value) { measured[key] = std::to_string(value); }

void ExperimentReport::set_measured(const std::string& key, const mpz_class& value) { measured[key] = value.get_str(); }

Json ExperimentReport::to_json() const {
  Json out;
  out["experiment"] = experiment;
  out["instance"] = instance;
  out["measured"] = measured;
  if (bound_expression) out["bound_expression"] = *bound_expression;
  if (bound) out["bound"] = *bound;
  if (ratio) out["ratio"] = *ratio;
  if (fit) {
    Json samples = Json::array();
    for (const auto& [n, v] : fit->samples) samples.push_back(Json{std::to_string(n), std::to_string(v)});
    out["fit"] = Json{{"exponent", fit->exponent}, {"samples", std::move(samples)}};
  }
  if (!details.empty()) out["details"] = details;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["checks"] = std::move(cs);
  out["warnings"] = warnings;
  out["passed"] = passed();
  return out;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os << "quantity,value\n";
  for (const auto& [key, value] : measured.items()) os << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  if (bound) os << "bound," << *bound << '\n';
  if (ratio) os << "ratio," << *ratio << '\n';
  if (fit) os << "fitted_exponent," << fit->exponent << '\n';
  os << "passed," << (passed() ? "true" : "false") << '\n';
  return os.str();
}

WindowPolicy parse_window_policy(std::string_view name) {
  if (name == "warn") return WindowPolicy::Warn;
  if (name == "error") return WindowPolicy::Error;
  throw std::invalid_argument("window policy must be warn or error");
}

// ---------------------------------------------------------------- rich ratios

std::vector<Rational> RichRatioProfile::rich_values(Count t) const {
  std::vector<Rational> out;
  for (const auto& [alpha, n] : counts)
    if (n >= t) out.push_back(alpha);
  return out;
}

RichRatioProfile rich_ratio_profile(const ScalarSet& c_in, const ScalarSet& d_in, const Rational& lambda,
                                    const Rational& mu) {
  const ScalarSet c = make_set(c_in);
  const ScalarSet d = make_set(d_in);
  RichRatioProfile p;
  std::unordered_map<Rational, Count> n;
  for (const auto& ci : c) {
    for (const auto& di : d) {
      const Rational den = di * (ci - lambda) - mu;
      if (den.is_zero()) {
        p.skipped_triples += c.size();
        continue;
      }
      const Rational inv = den.reciprocal();
      for (const auto& cj : c) {
        if (cj == ci) {
          ++p.zero_ratio_triples;
        } else {
          ++n[(cj - ci) * inv];
        }
      }
    }
  }
  p.counts.assign(n.begin(), n.end());
  std::sort(p.counts.begin(), p.counts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (const auto& [alpha, k] : p.counts) {
    p.total = checked_add(p.total, k);
    p.sum_of_squares = checked_add(p.sum_of_squares, checked_mul(k, k));
    p.max_count = std::max(p.max_count, k);
  }
  const Count cs = c.size(), ds = d.size();
  p.ceiling = std::min(checked_mul(cs, cs), checked_mul(cs, ds));
  p.ceiling_applies = !set_contains(c, lambda);
  return p;
}

ExperimentReport diag_rich_ratios(const ScalarSet& c_in, const ScalarSet& d_in, const Rational& lambda,
                                  const Rational& mu, const CheckOptions& options) {
  const ScalarSet c = make_set(c_in);
  const ScalarSet d = make_set(d_in);
  const RichRatioProfile p = rich_ratio_profile(c, d, lambda, mu);
  const Count cs = c.size(), ds = d.size();

  ExperimentReport r;
  r.experiment = "rich-ratio-profile";
  r.instance = Json{{"C", set_json(c)}, {"D", set_json(d)}, {"lambda", lambda.str()}, {"mu", mu.str()}};
  r.set_measured("sum_of_squares", p.sum_of_squares);
  r.set_measured("total", p.total);
  r.set_measured("distinct_ratios", static_cast<Count>(p.counts.size()));
  r.set_measured("max_count", p.max_count);
  r.set_measured("zero_ratio_triples", p.zero_ratio_triples);
  r.set_measured("skipped_triples", p.skipped_triples);
  r.set_measured("ceiling", p.ceiling);

  Json profile = Json::array();
  for (const auto& [alpha, k] : p.counts) profile.push_back(Json{alpha.str(), std::to_string(k)});
  r.details["profile"] = std::move(profile);
  r.details["ceiling_applies"] = p.ceiling_applies;

  const mpz_class all_triples = big(cs) * big(cs) * big(ds);
  r.add_check("triple_total", big(p.total) + big(p.zero_ratio_triples) + big(p.skipped_triples) == all_triples,
              "nonzero + zero + skipped = |C|^2|D|");
  r.add_check("ceiling_below_power", big(p.ceiling) * big(p.ceiling) <= big(cs) * big(cs) * big(cs) * big(ds),
              "min(|C|^2,|C||D|)^2 <= |C|^3|D|");
  if (p.ceiling_applies) {
    r.add_check("count_ceiling", p.max_count <= p.ceiling, le_detail(big(p.max_count), big(p.ceiling)));
    r.add_check("rich_set_vanishes", p.rich_values(p.ceiling + 1).empty(), "Lambda_t empty for t > ceiling");
  } else {
    r.warnings.push_back("lambda lies in C: the ceiling on n(alpha) does not apply");
  }

  // Λ_t only changes at t = n(α) + 1, so nesting is checked across those steps.
  std::vector<Count> steps{1};
  for (const auto& [alpha, k] : p.counts) steps.push_back(k + 1);
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  bool nested = true;
  std::vector<Rational> previous = p.rich_values(steps.front());
  for (std::size_t i = 1; i < steps.size(); ++i) {
    std::vector<Rational> current = p.rich_values(steps[i]);
    nested = nested && std::includes(previous.begin(), previous.end(), current.begin(), current.end());
    previous = std::move(current);
  }
  r.add_check("rich_sets_nested", nested, "Lambda_t contains Lambda_t' for t <= t'");

  if (cs * cs * ds <= kTupleOracleTriples) {
    std::vector<RatioTriple> triples;
    for (const auto& ci : c)
      for (const auto& di : d) {
        const Rational den = di * (ci - lambda) - mu;
        if (den.is_zero()) continue;
        for (const auto& cj : c)
          if (cj != ci) triples.push_back({cj - ci, den});
      }
    const Count direct = rich_ratio_squares_naive(triples);
    r.set_measured("sum_of_squares_direct", direct);
    r.add_check("sum_of_squares_matches_direct", direct == p.sum_of_squares,
                std::to_string(p.sum_of_squares) + " vs " + std::to_string(direct));
  }
  (void)options;
  return r;
}

// ---------------------------------------------------------------- checkers

ExperimentReport check_reciprocal_difference_energy(const ScalarSet& c_in, const ScalarSet& d_in,
                                                    const Rational& lambda, const Rational& mu,
                                                    const CheckOptions& options) {
  const ScalarSet c = make_set(c_in);
  const ScalarSet d = make_set(d_in);
  const Family fam = build_family({FamilyKind::ReciprocalDifference, c, d, lambda, mu, std::nullopt});
  const Count e = energy(fam.lines);

  ExperimentReport r;
  r.experiment = "reciprocal-difference-energy";
  r.instance = Json{{"family", "thm2"}, {"C", set_json(c)}, {"D", set_json(d)}, {"lambda", lambda.str()}, {"mu", mu.str()}};
  r.set_measured("energy", e);
  r.set_measured("lines", static_cast<Count>(fam.lines.size()));
  r.set_measured("skipped_pairs", static_cast<Count>(fam.report.skipped));

  if (fam.lines.size() <= options.naive_cap) {
    const Count naive = energy_naive(fam.lines, options.naive_cap);
    r.add_check("energy_matches_naive", naive == e, std::to_string(e) + " vs " + std::to_string(naive));
  }

  const PointSet cc = PointSet::grid(c, c);
  const PointSet dd = PointSet::grid(d, d);
  const MixedMoments mm = mixed_moments(cc, dd);
  const Count f4c = fourth_moment(cc);
  const Count f4d = fourth_moment(dd);
  r.set_measured("mixed_moment", mm.total);
  r.set_measured("mixed_moment_doubly_rich", mm.doubly_rich);
  r.set_measured("fourth_moment_cc", f4c);
  r.set_measured("fourth_moment_dd", f4d);

  const Count cs = c.size(), ds = d.size();
  const mpz_class quad = big(cs) * big(cs) * big(ds) * big(ds) + big(mm.total);
  r.add_check("collinear_quadruple_bound", big(e) <= quad, le_detail(big(e), quad));
  const mpz_class lhs = big(mm.doubly_rich) * big(mm.doubly_rich);
  const mpz_class rhs = big(f4c) * big(f4d);
  r.add_check("cauchy_schwarz_step", lhs <= rhs, le_detail(lhs, rhs));

  const Decimal bound = count_power(cs, Rational(5, 2)) * count_power(ds, Rational(5, 2)) +
                        count_power(cs, Rational(4)) + count_power(ds, Rational(4));
  set_bound(r, "|C|^(5/2)|D|^(5/2) + |C|^4 + |D|^4", bound, to_decimal(e), options.digits);
  return r;
}

ExperimentReport check_shifted_product_energy(const ScalarSet& c_in, const ScalarSet& d_in, const Rational& lambda,
                                              const Rational& mu, const CheckOptions& options) {
  const ScalarSet c = make_set(c_in);
  const ScalarSet d = make_set(d_in);
  const Family fam = build_family({FamilyKind::ShiftedProduct, c, d, lambda, mu, std::nullopt});
  const Count e = energy(fam.lines);
  const Count e_same = same_intercept_energy(fam.lines);
  const RichRatioProfile p = rich_ratio_profile(c, d, lambda, mu);

  ExperimentReport r;
  r.experiment = "shifted-product-energy";
  r.instance = Json{{"family", "thm3"}, {"C", set_json(c)}, {"D", set_json(d)}, {"lambda", lambda.str()}, {"mu", mu.str()}};
  r.set_measured("energy", e);
  r.set_measured("lines", static_cast<Count>(fam.lines.size()));
  r.set_measured("skipped_pairs", static_cast<Count>(fam.report.skipped));
  r.set_measured("same_intercept_solutions", e_same);
  r.set_measured("other_solutions", e - e_same);
  r.set_measured("rich_ratio_sum_of_squares", p.sum_of_squares);

  if (fam.lines.size() <= options.naive_cap) {
    const Count naive = energy_naive(fam.lines, options.naive_cap);
    r.add_check("energy_matches_naive", naive == e, std::to_string(e) + " vs " + std::to_string(naive));
    const Count naive_same = same_intercept_energy_naive(fam.lines);
    r.add_check("same_intercept_matches_naive", naive_same == e_same,
                std::to_string(e_same) + " vs " + std::to_string(naive_same));
  }

  const Count cs = c.size(), ds = d.size();
  if (p.ceiling_applies) {
    const mpz_class same_cap = big(cs) * big(cs) * big(ds) * big(ds) * big(ds);
    r.add_check("same_intercept_bound", big(e_same) <= same_cap, le_detail(big(e_same), same_cap));
    const mpz_class other_cap = big(p.sum_of_squares) * big(ds);
    r.add_check("rich_ratio_bound", big(e - e_same) <= other_cap, le_detail(big(e - e_same), other_cap));
  } else {
    r.warnings.push_back("lambda lies in C: the decomposition bounds do not apply");
  }

  const Decimal bound = count_power(cs, Rational(3)) * count_power(ds, Rational(5, 2)) +
                        count_power(cs, Rational(2)) * count_power(ds, Rational(3));
  set_bound(r, "|C|^3|D|^(5/2) + |C|^2|D|^3", bound, to_decimal(e), options.digits);
  return r;
}

ExperimentReport check_grid_incidences(const ScalarSet& a_in, const ScalarSet& b_in, const LineSet& lines_in,
                                       const CheckOptions& options) {
  const ScalarSet a = make_set(a_in);
  const ScalarSet b = make_set(b_in);
  const LineSet lines = make_line_set(lines_in);
  const PointSet points = PointSet::grid(a, b);
  const Count incidences = count_incidences(points, std::span<const AffLine>(lines));
  const Count e = energy(lines);

  ExperimentReport r;
  r.experiment = "grid-incidences";
  r.instance = Json{{"A", set_json(a)}, {"B", set_json(b)}, {"lines", to_json(std::span<const AffLine>(lines))}};
  r.set_measured("incidences", incidences);
  r.set_measured("energy", e);
  r.set_measured("points", static_cast<Count>(points.size()));
  r.set_measured("lines", static_cast<Count>(lines.size()));

  const mpz_class pairs = big(points.size()) * big(lines.size());
  r.add_check("at_most_all_pairs", big(incidences) <= pairs, le_detail(big(incidences), pairs));
  if (points.size() * lines.size() <= kPairwiseIncidenceBudget) {
    const Count direct = serial::count_incidences(points, std::span<const AffLine>(lines));
    r.add_check("incidences_match_pairwise", direct == incidences,
                std::to_string(incidences) + " vs " + std::to_string(direct));
  }

  const std::size_t as = a.size(), bs = b.size(), ls = lines.size();
  if (ls == 0) return r;
  const Decimal root_b = count_power(bs, Rational(1, 2));
  const Decimal bound = root_b * count_power(as, Rational(2, 3)) * power(to_decimal(e), Rational(1, 6)) *
                            count_power(ls, Rational(1, 3)) +
                        root_b * to_decimal(static_cast<Count>(ls));
  set_bound(r, "|B|^(1/2)|A|^(2/3)E^(1/6)|L|^(1/3) + |B|^(1/2)|L|", bound, to_decimal(incidences), options.digits);

  const std::size_t ps = points.size();
  const Decimal trotter = power(to_decimal(static_cast<Count>(ps)) * to_decimal(static_cast<Count>(ls)), Rational(2, 3)) +
                          to_decimal(static_cast<Count>(ps)) + to_decimal(static_cast<Count>(ls));
  r.details["point_line_bound"] = format_decimal(trotter, options.digits);
  r.details["point_line_ratio"] = ratio_text(to_decimal(incidences), trotter, options.digits);
  return r;
}

ExperimentReport check_sum_product_incidences(const ScalarSet& a_in, const ScalarSet& b_in,
                                              const CheckOptions& options) {
  const ScalarSet a = make_set(a_in);
  const ScalarSet b = make_set(b_in);
  const ScalarSet sums = sumset(a, a);
  const ScalarSet products = productset(a, b);
  const Family fam = build_family({FamilyKind::Elekes, b, a, Rational(0), Rational(0), std::nullopt});

  ExperimentReport r = check_grid_incidences(sums, products, fam.lines, options);
  r.experiment = "sum-product-incidences";
  r.instance = Json{{"A", set_json(a)}, {"B", set_json(b)}};
  const Count nonzero_b = b.size() - (set_contains(b, Rational(0)) ? 1 : 0);
  r.set_measured("a_size", static_cast<Count>(a.size()));
  r.set_measured("b_size", static_cast<Count>(b.size()));
  r.set_measured("sumset_size", static_cast<Count>(sums.size()));
  r.set_measured("productset_size", static_cast<Count>(products.size()));
  r.details["doubling"] = Rational(big(sums.size()), big(a.size())).str();

  const Count incidences = std::stoull(r.measured["incidences"].get<std::string>());
  const mpz_class guaranteed = big(a.size()) * big(a.size()) * big(nonzero_b);
  r.add_check("construction_incidences", big(incidences) >= guaranteed,
              big(incidences).get_str() + " >= " + guaranteed.get_str());
  return r;
}

ExperimentReport check_two_line_traces(const PointSet& points, const PlanarLine& first, const PlanarLine& second,
                                       const CheckOptions& options) {
  if (first == second) throw std::invalid_argument("check_two_line_traces: the two lines must differ");
  const LineProfile profile = line_profile(points);
  const Trace t1 = trace_on_line(points, profile, first);
  const Trace t2 = trace_on_line(points, profile, second);

  ExperimentReport r;
  r.experiment = "two-line-traces";
  r.instance = Json{{"points", to_json(points)}, {"first_line", to_json(first)}, {"second_line", to_json(second)}};
  r.set_measured("points", static_cast<Count>(points.size()));
  r.set_measured("spanned_lines", static_cast<Count>(profile.size()));
  r.set_measured("first_trace", static_cast<Count>(t1.projective_count()));
  r.set_measured("first_trace_affine", static_cast<Count>(t1.affine_count));
  r.set_measured("second_trace", static_cast<Count>(t2.projective_count()));
  r.set_measured("second_trace_affine", static_cast<Count>(t2.affine_count));
  const Count larger = std::max(t1.projective_count(), t2.projective_count());
  r.set_measured("trace_sum", static_cast<Count>(t1.projective_count() + t2.projective_count()));
  r.set_measured("trace_max", larger);

  const bool collinear_set = profile.size() <= 1;
  r.details["first_trace_infinite"] = t1.infinite;
  r.details["second_trace_infinite"] = t2.infinite;
  r.details["degenerate"] = collinear_set;
  if (collinear_set) r.warnings.push_back("degenerate: all points lie on one line");
  if (t1.infinite) r.warnings.push_back("first line carries two or more points: its trace is infinite");
  if (t2.infinite) r.warnings.push_back("second line carries two or more points: its trace is infinite");

  if (points.size() <= kPairwiseProfilePoints) {
    const LineProfile direct = serial::line_profile(points);
    bool same = direct.size() == profile.size();
    for (std::size_t i = 0; same && i < direct.size(); ++i) {
      same = direct.entries()[i].line == profile.entries()[i].line &&
             direct.entries()[i].multiplicity == profile.entries()[i].multiplicity;
    }
    r.add_check("profile_matches_pairwise", same);
  }

  const auto& grid = points.grid_factors();
  if (!grid) return r;
  const std::size_t as = grid->xs.size(), bs = grid->ys.size();
  r.set_measured("a_size", static_cast<Count>(as));
  r.set_measured("b_size", static_cast<Count>(bs));

  auto is_axis = [](const PlanarLine& l) { return l.is_vertical() || l.is_horizontal(); };
  auto is_general = [](const PlanarLine& l) { return !l.is_at_infinity() && !l.is_vertical() && !l.is_horizontal(); };
  const Decimal measured = to_decimal(larger);
  std::optional<bool> window;
  if ((first.is_at_infinity() && is_general(second)) || (second.is_at_infinity() && is_general(first))) {
    const Decimal bound = count_power(as, Rational(15, 14)) * count_power(bs, Rational(15, 14));
    set_bound(r, "|A|^(15/14)|B|^(15/14)", bound, measured, options.digits);
    const mpz_class a5 = big(as) * big(as) * big(as) * big(as) * big(as);
    const mpz_class b5 = big(bs) * big(bs) * big(bs) * big(bs) * big(bs);
    const mpz_class a3 = big(as) * big(as) * big(as);
    const mpz_class b3 = big(bs) * big(bs) * big(bs);
    window = a5 >= b3 && b5 >= a3;
    r.details["size_window"] = "|A|^(5/3) >= |B| >= |A|^(3/5)";
  } else if (!first.is_at_infinity() && !second.is_at_infinity() && (is_axis(first) || is_axis(second))) {
    const PlanarLine& axis = is_axis(first) ? first : second;
    const PlanarLine& other = is_axis(first) ? second : first;
    const bool parallel = (axis.is_vertical() && other.is_vertical()) || (axis.is_horizontal() && other.is_horizontal());
    if (!parallel) {
      const Decimal bound = to_decimal(static_cast<Count>(as)) * count_power(bs, Rational(15, 14));
      set_bound(r, "|A||B|^(15/14)", bound, measured, options.digits);
      const bool nonzero = !set_contains(grid->xs, Rational(0)) && !set_contains(grid->ys, Rational(0));
      const bool axis_unspanned = points.count_on(axis) < 2;
      window = big(bs) <= big(as) * big(as) && nonzero && axis_unspanned;
      r.details["size_window"] = "|B| <= |A|^2, 0 not in A or B, axis line not spanned";
    }
  }
  if (window) {
    r.details["window_holds"] = *window;
    if (!*window) {
      if (options.window_policy == WindowPolicy::Error) {
        r.add_check("size_window", false, "instance lies outside the hypothesis window");
      } else {
        r.warnings.push_back("instance lies outside the hypothesis window");
      }
    }
  }
  return r;
}

ExperimentReport check_product_grid_energy(const ScalarSet& a_in, const CheckOptions& options) {
  const ScalarSet a = make_set(a_in);
  const ProductGridEnergyCheck g = product_grid_energy_check(a);

  ExperimentReport r;
  r.experiment = "product-grid-energy";
  r.instance = Json{{"A", set_json(a)}};
  r.set_measured("lines", static_cast<Count>(g.lines));
  r.set_measured("energy", g.energy);
  r.set_measured("fourth_multiplicative_energy", g.fourth_multiplicative_energy);
  r.set_measured("ratio_count", g.ratio_energy);
  r.set_measured("cross_multiplied_ratio_count", g.product_energy);
  r.details["holds_with_ratio_count"] = g.holds_with_ratio_energy;

  const mpz_class lhs = big(g.energy) * big(g.energy);
  const mpz_class rhs = big(g.fourth_multiplicative_energy) * big(g.product_energy);
  r.add_check("energy_squared_bound", g.holds_with_product_energy, le_detail(lhs, rhs));
  if (g.lines <= options.naive_cap) {
    std::vector<AffLine> lines;
    for (const auto& m : a)
      for (const auto& c : a) lines.emplace_back(m, c);
    const Count naive = energy_naive(lines, options.naive_cap);
    r.add_check("energy_matches_naive", naive == g.energy, std::to_string(g.energy) + " vs " + std::to_string(naive));
  }

  const Decimal bound = boost::multiprecision::sqrt(to_decimal(g.fourth_multiplicative_energy) * to_decimal(g.product_energy));
  set_bound(r, "E4*(A)^(1/2) Q(A)^(1/2)", bound, to_decimal(g.energy), options.digits);
  return r;
}

// ---------------------------------------------------------------- fits

Decimal fit_slope(const std::vector<std::pair<Count, Count>>& samples) {
  if (samples.size() < 3) throw std::invalid_argument("fit_exponent: need at least 3 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first == 0 || samples[i].second == 0)
      throw std::invalid_argument("fit_exponent: sizes and values must be positive");
    if (i > 0 && samples[i].first <= samples[i - 1].first)
      throw std::invalid_argument("fit_exponent: sizes must be strictly increasing");
  }
  Decimal sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, v] : samples) {
    const Decimal x = log2(to_decimal(n));
    const Decimal y = log2(to_decimal(v));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const Decimal k = to_decimal(static_cast<Count>(samples.size()));
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::string fit_exponent(const std::vector<std::pair<Count, Count>>& samples) {
  return format_fixed(fit_slope(samples), 4);
}

// ---------------------------------------------------------------- sweeps

std::string_view sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::ReciprocalDifferenceEnergy: return "thm2";
    case SweepKind::ShiftedProductEnergy: return "thm3";
    case SweepKind::InterceptSet: return "q";
    case SweepKind::ThreeVariable: return "s14";
    case SweepKind::ProductPlus: return "aa-plus-a";
    case SweepKind::FourfoldSum: return "a-sum4";
    case SweepKind::TripleProduct: return "aaa";
  }
  return "?";
}

SweepKind parse_sweep_kind(std::string_view name) {
  for (auto k : {SweepKind::ReciprocalDifferenceEnergy, SweepKind::ShiftedProductEnergy, SweepKind::InterceptSet,
                 SweepKind::ThreeVariable, SweepKind::ProductPlus, SweepKind::FourfoldSum, SweepKind::TripleProduct}) {
    if (sweep_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown sweep kind '" + std::string(name) + "'");
}

namespace {

struct SweepPoint {
  Count measured = 0;
  Decimal bound;
};

SweepPoint sweep_point(const SweepSpec& spec, const ScalarSet& a) {
  const std::size_t n = a.size();
  switch (spec.kind) {
    case SweepKind::ReciprocalDifferenceEnergy: {
      const Family fam = build_family({FamilyKind::ReciprocalDifference, a, a, spec.lambda, spec.mu, std::nullopt});
      return {energy(fam.lines), count_power(n, Rational(5)) + Decimal(2) * count_power(n, Rational(4))};
    }
    case SweepKind::ShiftedProductEnergy: {
      const Family fam = build_family({FamilyKind::ShiftedProduct, a, a, spec.lambda, spec.mu, std::nullopt});
      return {energy(fam.lines), count_power(n, Rational(11, 2)) + count_power(n, Rational(5))};
    }
    case SweepKind::InterceptSet: return {intercept_set(a).size(), count_power(n, Rational(29, 14))};
    case SweepKind::ThreeVariable: return {three_variable_expander(a).size(), count_power(n, Rational(5, 3))};
    case SweepKind::ProductPlus: return {product_plus_set(a).size(), count_power(n, Rational(146, 97))};
    case SweepKind::FourfoldSum: {
      const Decimal nd = to_decimal(static_cast<Count>(n));
      return {fourfold_sum_product_set(a).size(), n > 1 ? nd * nd / log2(nd) : nd};
    }
    case SweepKind::TripleProduct: {
      const Rational doubling(to_mpz(sumset(a, a).size()), to_mpz(n));
      return {triple_product_set(a).size(),
              count_power(n, Rational(785, 392)) / power(to_decimal(doubling), Rational(125, 56))};
    }
  }
  throw std::logic_error("unknown sweep kind");
}

std::string_view sweep_bound_expression(SweepKind kind) {
  switch (kind) {
    case SweepKind::ReciprocalDifferenceEnergy: return "n^5 + 2n^4";
    case SweepKind::ShiftedProductEnergy: return "n^(11/2) + n^5";
    case SweepKind::InterceptSet: return "n^(2+1/14)";
    case SweepKind::ThreeVariable: return "n^(5/3)";
    case SweepKind::ProductPlus: return "n^(3/2+1/194)";
    case SweepKind::FourfoldSum: return "n^2/log2(n)";
    case SweepKind::TripleProduct: return "n^(2+1/392)/K^(125/56)";
  }
  return "?";
}

}  // namespace

std::string SweepResult::to_csv() const {
  std::ostringstream os;
  os << "n,measured,bound,ratio,runtime_ms\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.measured << ',' << row.bound << ',' << row.ratio << ',';
    if (row.runtime_ms) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << *row.runtime_ms;
      os << ms.str();
    }
    os << '\n';
  }
  return os.str();
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.sizes.empty()) throw std::invalid_argument("sweep: no sizes given");
  SweepResult out;
  ExperimentReport& r = out.report;
  r.experiment = "sweep";
  Json sizes = Json::array();
  for (auto n : spec.sizes) sizes.push_back(n);
  r.instance = Json{{"kind", sweep_kind_name(spec.kind)},
                    {"set", gen_kind_name(spec.set.kind)},
                    {"sizes", std::move(sizes)}};
  if (spec.set.kind == GenKind::RandomInt) {
    r.instance["seed"] = std::to_string(spec.set.seed);
    r.instance["range"] = std::to_string(spec.set.range);
  } else {
    r.instance["start"] = spec.set.start.str();
    r.instance["step"] = spec.set.step.str();
  }
  if (spec.kind == SweepKind::ReciprocalDifferenceEnergy || spec.kind == SweepKind::ShiftedProductEnergy) {
    r.instance["lambda"] = spec.lambda.str();
    r.instance["mu"] = spec.mu.str();
  }
  r.bound_expression = std::string(sweep_bound_expression(spec.kind));

  std::vector<std::pair<Count, Count>> samples;
  Json rows = Json::array();
  for (const std::size_t n : spec.sizes) {
    GenSpec gen = spec.set;
    gen.n = n;
    if (gen.kind == GenKind::RandomInt && gen.range == 0) gen.range = 4 * static_cast<std::uint64_t>(n) * n;
    const ScalarSet a = generate(gen);

    const auto start = std::chrono::steady_clock::now();
    const SweepPoint point = sweep_point(spec, a);
    const auto stop = std::chrono::steady_clock::now();

    SweepRow row;
    row.n = n;
    row.measured = point.measured;
    row.bound = format_decimal(point.bound, spec.options.digits);
    row.ratio = ratio_text(to_decimal(point.measured), point.bound, spec.options.digits);
    if (spec.timing) row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    samples.emplace_back(n, point.measured);

    Json jr{{"n", n}, {"measured", std::to_string(row.measured)}, {"bound", row.bound}, {"ratio", row.ratio}};
    if (row.runtime_ms) jr["runtime_ms"] = *row.runtime_ms;
    rows.push_back(std::move(jr));
    out.rows.push_back(std::move(row));
  }
  r.details["rows"] = std::move(rows);

  if (samples.size() >= 3) {
    r.fit = ExponentFit{samples, fit_exponent(samples)};
    const Decimal slope(r.fit->exponent);  // windows apply to the reported value
    if (spec.expect_min) {
      const bool ok = slope >= to_decimal(*spec.expect_min);
      r.add_check("exponent_at_least", ok, r.fit->exponent + " >= " + spec.expect_min->str());
    }
    if (spec.expect_max) {
      const bool ok = slope <= to_decimal(*spec.expect_max);
      r.add_check("exponent_at_most", ok, r.fit->exponent + " <= " + spec.expect_max->str());
    }
  } else if (spec.expect_min || spec.expect_max) {
    throw std::invalid_argument("sweep: an exponent window needs at least 3 sizes");
  }
  return out;
}

}  // namespace affine_lab
