#include "affine_lab/energy.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace affine_lab {

// ---------------------------------------------------------------- multiset

QuotientMultiset::QuotientMultiset(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& l, const Entry& r) { return l.first < r.first; });
}

Count QuotientMultiset::multiplicity(const AffLine& g) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), g,
                                   [](const Entry& e, const AffLine& v) { return e.first < v; });
  return (it != entries_.end() && it->first == g) ? it->second : 0;
}

Count QuotientMultiset::total() const {
  Count t = 0;
  for (const auto& [g, r] : entries_) t = checked_add(t, r);
  return t;
}

Count QuotientMultiset::energy() const {
  Count e = 0;
  for (const auto& [g, r] : entries_) e = checked_add(e, checked_mul(r, r));
  return e;
}

QuotientMultiset quotient_multiset(std::span<const AffLine> input) {
  const LineSet lines = make_line_set({input.begin(), input.end()});
  std::unordered_map<AffLine, Count> counts;
  for (const auto& l1 : lines)
    for (const auto& l2 : lines) ++counts[quotient(l1, l2)];
  return QuotientMultiset({counts.begin(), counts.end()});
}

// ---------------------------------------------------------------- fast energy

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t x = static_cast<std::uint64_t>(r & kMersenne61) + static_cast<std::uint64_t>(r >> 61);
  if (x >= kMersenne61) x -= kMersenne61;
  return x;
}

std::uint64_t powmod61(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  while (exp != 0) {
    if (exp & 1U) out = mulmod61(out, base);
    base = mulmod61(base, base);
    exp >>= 1U;
  }
  return out;
}

// Image of a rational in Z/(2^61 - 1); nullopt when it is not a unit there.
std::optional<std::uint64_t> unit_residue(const Rational& v) {
  const std::uint64_t n = mpz_fdiv_ui(v.num().get_mpz_t(), kMersenne61);
  const std::uint64_t d = mpz_fdiv_ui(v.den().get_mpz_t(), kMersenne61);
  if (n == 0 || d == 0) return std::nullopt;
  return mulmod61(n, powmod61(d, kMersenne61 - 2));
}

struct SlopeClass {
  Rational slope;
  std::vector<Rational> intercepts;
  std::uint64_t residue = 0;
  std::uint64_t inverse_residue = 0;
};

std::vector<SlopeClass> slope_classes(const LineSet& lines) {
  std::vector<SlopeClass> classes;
  for (const auto& l : lines) {  // sorted by slope, so classes are contiguous
    if (classes.empty() || classes.back().slope != l.slope()) classes.push_back({l.slope(), {}, 0, 0});
    classes.back().intercepts.push_back(l.intercept());
  }
  return classes;
}

using SlopePair = std::pair<std::uint32_t, std::uint32_t>;  // (class of l1, class of l2)

// Σ r(g)² over the quotients whose slope is one fixed ratio.
Count bucket_energy(const std::vector<SlopeClass>& classes, std::span<const SlopePair> pairs,
                    std::unordered_map<Rational, Count>& counts) {
  counts.clear();
  std::vector<Rational> scaled;
  for (const auto& [i, j] : pairs) {
    const SlopeClass& first = classes[i];
    const SlopeClass& second = classes[j];
    scaled.clear();
    for (const auto& c2 : second.intercepts) scaled.push_back(c2 / first.slope);
    for (const auto& c1 : first.intercepts) {
      const Rational shift = c1 / first.slope;
      for (const auto& s2 : scaled) ++counts[s2 - shift];
    }
  }
  Count e = 0;
  for (const auto& [key, r] : counts) e = checked_add(e, checked_mul(r, r));
  return e;
}

Count energy_over_buckets(const std::vector<SlopeClass>& classes, const std::vector<SlopePair>& pairs,
                          const std::vector<std::size_t>& bounds) {
  Count total = 0;
  const auto buckets = static_cast<std::ptrdiff_t>(bounds.size()) - 1;
#pragma omp parallel reduction(+ : total)
  {
    std::unordered_map<Rational, Count> counts;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < buckets; ++b) {
      const auto lo = bounds[static_cast<std::size_t>(b)];
      const auto hi = bounds[static_cast<std::size_t>(b) + 1];
      total += bucket_energy(classes, std::span(pairs).subspan(lo, hi - lo), counts);
    }
  }
  return total;
}

// Exact ratio grouping; used when some slope has no residue.
Count energy_exact_buckets(const std::vector<SlopeClass>& classes) {
  std::map<Rational, std::vector<SlopePair>> by_ratio;
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    for (std::uint32_t j = 0; j < classes.size(); ++j) by_ratio[classes[j].slope / classes[i].slope].push_back({i, j});
  std::vector<SlopePair> pairs;
  std::vector<std::size_t> bounds{0};
  for (auto& [ratio, list] : by_ratio) {
    pairs.insert(pairs.end(), list.begin(), list.end());
    bounds.push_back(pairs.size());
  }
  return energy_over_buckets(classes, pairs, bounds);
}

constexpr std::size_t kPairsPerPass = std::size_t{1} << 22;

}  // namespace

Count energy(std::span<const AffLine> input) {
  const LineSet lines = make_line_set({input.begin(), input.end()});
  if (lines.empty()) return 0;
  if (lines.size() > 2'000'000) throw std::overflow_error("energy: line set too large for 64-bit counts");

  std::vector<SlopeClass> classes = slope_classes(lines);
  for (auto& cls : classes) {
    const auto r = unit_residue(cls.slope);
    if (!r) return energy_exact_buckets(classes);
    cls.residue = *r;
    cls.inverse_residue = powmod61(*r, kMersenne61 - 2);
  }

  // Equal slope ratios have equal residues, so partitioning the k² slope
  // pairs by residue keeps every ratio class inside one pass. Within a
  // pass, runs of equal residue are split by exact ratio before counting.
  const std::size_t k = classes.size();
  const std::size_t passes = std::max<std::size_t>(1, (k * k + kPairsPerPass - 1) / kPairsPerPass);
  Count total = 0;
  std::vector<std::pair<std::uint64_t, SlopePair>> tagged;
  for (std::size_t pass = 0; pass < passes; ++pass) {
    tagged.clear();
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint64_t ratio = mulmod61(classes[j].residue, classes[i].inverse_residue);
        if (ratio % passes == pass) tagged.push_back({ratio, {i, j}});
      }
    }
    std::sort(tagged.begin(), tagged.end());

    std::vector<SlopePair> pairs;
    std::vector<std::size_t> bounds{0};
    pairs.reserve(tagged.size());
    for (std::size_t lo = 0; lo < tagged.size();) {
      std::size_t hi = lo;
      while (hi < tagged.size() && tagged[hi].first == tagged[lo].first) ++hi;
      if (hi - lo == 1) {
        pairs.push_back(tagged[lo].second);
        bounds.push_back(pairs.size());
      } else {
        std::map<Rational, std::vector<SlopePair>> exact;
        for (std::size_t t = lo; t < hi; ++t) {
          const auto [i, j] = tagged[t].second;
          exact[classes[j].slope / classes[i].slope].push_back({i, j});
        }
        for (auto& [ratio, list] : exact) {
          pairs.insert(pairs.end(), list.begin(), list.end());
          bounds.push_back(pairs.size());
        }
      }
      lo = hi;
    }
    total = checked_add(total, energy_over_buckets(classes, pairs, bounds));
  }
  return total;
}

Count energy_naive(std::span<const AffLine> input, std::size_t cap) {
  const LineSet lines = make_line_set({input.begin(), input.end()});
  const std::size_t n = lines.size();
  if (n > cap) {
    throw std::length_error("energy_naive: " + std::to_string(n) + " lines exceeds cap " + std::to_string(cap));
  }
  std::vector<AffLine> table;
  table.reserve(n * n);
  for (const auto& l1 : lines)
    for (const auto& l2 : lines) table.push_back(quotient(l1, l2));
  Count solutions = 0;
  for (const auto& left : table)
    for (const auto& right : table)
      if (left == right) ++solutions;
  return solutions;
}

// ---------------------------------------------------------------- scalar energies

namespace {

template <typename Map>
Count sum_of_squares(const Map& m) {
  Count e = 0;
  for (const auto& [key, r] : m) e = checked_add(e, checked_mul(r, r));
  return e;
}

std::unordered_map<Rational, Count> difference_counts(const ScalarSet& a) {
  std::unordered_map<Rational, Count> diffs;
  for (const auto& x : a)
    for (const auto& y : a) ++diffs[x - y];
  return diffs;
}

}  // namespace

Count additive_energy(const ScalarSet& input) {
  const ScalarSet a = make_set(input);
  std::unordered_map<Rational, Count> sums;
  for (const auto& x : a)
    for (const auto& y : a) ++sums[x + y];
  return sum_of_squares(sums);
}

Count multiplicative_energy(const ScalarSet& input, unsigned k) {
  const ScalarSet a = make_set(input);
  if (k < 2) throw std::invalid_argument("multiplicative_energy: k must be at least 2");
  if (set_contains(a, Rational(0))) throw std::invalid_argument("multiplicative_energy: 0 is not allowed in A");
  std::unordered_map<Rational, Count> ratios;
  for (const auto& x : a)
    for (const auto& y : a) ++ratios[x / y];
  Count e = 0;
  for (const auto& [ratio, r] : ratios) e = checked_add(e, checked_pow(r, k));
  return e;
}

Count difference_ratio_energy(const ScalarSet& input) {
  const auto diffs = difference_counts(make_set(input));
  std::unordered_map<Rational, Count> q;
  for (const auto& [den, rden] : diffs) {
    if (den.is_zero()) continue;
    for (const auto& [num, rnum] : diffs) q[num / den] += checked_mul(rnum, rden);
  }
  return sum_of_squares(q);
}

Count difference_product_energy(const ScalarSet& input) {
  const auto diffs = difference_counts(make_set(input));
  std::unordered_map<Rational, Count> products;
  for (const auto& [x, rx] : diffs)
    for (const auto& [y, ry] : diffs) products[x * y] += checked_mul(rx, ry);
  return sum_of_squares(products);
}

ProductGridEnergyCheck product_grid_energy_check(const ScalarSet& input) {
  const ScalarSet a = make_set(input);
  if (set_contains(a, Rational(0))) throw std::invalid_argument("product_grid_energy_check: 0 is not allowed in A");
  std::vector<AffLine> lines;
  for (const auto& m : a)
    for (const auto& c : a) lines.emplace_back(m, c);

  ProductGridEnergyCheck out;
  out.lines = lines.size();
  out.energy = energy(lines);
  out.fourth_multiplicative_energy = multiplicative_energy(a, 4);
  out.ratio_energy = difference_ratio_energy(a);
  out.product_energy = difference_product_energy(a);
  const mpz_class e2 = to_mpz(out.energy) * to_mpz(out.energy);
  const mpz_class e4 = to_mpz(out.fourth_multiplicative_energy);
  out.holds_with_product_energy = e2 <= e4 * to_mpz(out.product_energy);
  out.holds_with_ratio_energy = e2 <= e4 * to_mpz(out.ratio_energy);
  return out;
}

}  // namespace affine_lab
