#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace affine_lab {

/// Counts of tuples, incidences and pairs. Desk-scale inputs keep every
/// count the library produces well inside 64 bits; the arithmetic helpers
/// in this header throw std::overflow_error rather than wrap.
using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count checked_pow(Count base, unsigned exponent);

std::size_t hash_mpz(const mpz_class& z);

inline mpz_class to_mpz(Count v) { return mpz_class(static_cast<unsigned long>(v)); }

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

/**
 * Exact fraction backed by GMP.
 *
 * Always in lowest terms with a positive denominator, so zero is 0/1 and
 * two Rationals compare equal exactly when they denote the same number.
 * Hashing and ordering are consistent with that equality, which is what
 * lets rationals serve as multiset keys in the counting kernels.
 */
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

  /// n/d reduced; throws std::domain_error when d == 0.
  Rational(const mpz_class& n, const mpz_class& d);

  explicit Rational(mpq_class q);

  /// Accepts "p", "p/q" and "-p/q" with decimal integers (surrounding
  /// whitespace ignored). Throws std::invalid_argument on malformed text
  /// and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const;

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

  /// Approximate value for logging and fits; never used on counting paths.
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Sorted, duplicate-free scalar set. Every set-valued operation in the
/// library returns one of these.
using ScalarSet = std::vector<Rational>;

/// Sorts and deduplicates in place, returning the same vector.
ScalarSet make_set(std::vector<Rational> values);

bool set_contains(const ScalarSet& set, const Rational& value);

}  // namespace affine_lab

template <>
struct std::hash<affine_lab::Rational> {
  std::size_t operator()(const affine_lab::Rational& r) const noexcept { return r.hash(); }
};
