#include "affine_lab/expanders.hpp"

#include <omp.h>

#include <stdexcept>
#include <unordered_set>

#include "affine_lab/energy.hpp"

namespace affine_lab {

namespace {

template <typename Op>
ScalarSet combine(const ScalarSet& a, const ScalarSet& b, Op op) {
  std::unordered_set<Rational> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.insert(op(x, y));
  return make_set({out.begin(), out.end()});
}

ScalarSet merge_partials(std::vector<std::unordered_set<Rational>>& partial) {
  std::vector<Rational> all;
  for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
  return make_set(std::move(all));
}

}  // namespace

ScalarSet sumset(const ScalarSet& a, const ScalarSet& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

ScalarSet productset(const ScalarSet& a, const ScalarSet& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

ScalarSet product_plus_set(const ScalarSet& a) { return sumset(productset(a, a), a); }

ScalarSet fourfold_sum_product_set(const ScalarSet& a) {
  const ScalarSet two = sumset(a, a);
  return productset(a, sumset(two, two));
}

ScalarSet triple_product_set(const ScalarSet& a) { return productset(productset(a, a), a); }

ScalarSet intercept_set(const ScalarSet& input) {
  const ScalarSet a = make_set(input);
  // Points of A × A in row-major order; index p ↦ (a[p / n], a[p % n]).
  const std::size_t n = a.size();
  const std::size_t points = n * n;
  std::vector<std::unordered_set<Rational>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t sp = 0; sp < static_cast<std::ptrdiff_t>(points); ++sp) {
      const auto p = static_cast<std::size_t>(sp);
      const Rational& x1 = a[p / n];
      const Rational& y1 = a[p % n];
      // Only pairs with a larger first coordinate; equal x gives a vertical line.
      for (std::size_t q = (p / n + 1) * n; q < points; ++q) {
        const Rational& x2 = a[q / n];
        const Rational& y2 = a[q % n];
        local.insert((x1 * y2 - y1 * x2) / (x1 - x2));
      }
    }
  }
  return merge_partials(partial);
}

ScalarSet three_variable_expander(const ScalarSet& input) {
  const ScalarSet a = make_set(input);
  std::unordered_set<Rational> out;
  for (const auto& a1 : a)
    for (const auto& a2 : a) {
      const Rational gap = a1 - a2;
      for (const auto& a3 : a) out.insert(gap * a3 + a1);
    }
  return make_set({out.begin(), out.end()});
}

GrowthStats growth_stats(const ScalarSet& input, const std::optional<ScalarSet>& b) {
  const ScalarSet a = make_set(input);
  if (a.empty()) throw std::invalid_argument("growth_stats: A must be nonempty");
  GrowthStats s;
  s.size_a = a.size();
  s.sumset_size = sumset(a, a).size();
  s.productset_size = productset(a, a).size();
  s.doubling = Rational(mpz_class(static_cast<unsigned long>(s.sumset_size)),
                        mpz_class(static_cast<unsigned long>(s.size_a)));
  if (b) {
    const ScalarSet bs = make_set(*b);
    s.size_b = bs.size();
    s.cross_product_size = productset(a, bs).size();
  }
  if (!set_contains(a, Rational(0))) {
    const mpz_class cube = to_mpz(s.size_a) * to_mpz(s.size_a) * to_mpz(s.size_a);
    s.multiplicative_ratio = Rational(cube, to_mpz(multiplicative_energy(a, 2)));
  }
  return s;
}

}  // namespace affine_lab
