#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <string>

#include "affine_lab/rational.hpp"

namespace affine_lab {

/// 50-digit decimal floats; reported values are rounded to fewer digits.
using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>>;

inline constexpr int kDefaultSignificantDigits = 30;
inline constexpr int kMaxSignificantDigits = 45;

Decimal to_decimal(const Rational& r);
Decimal to_decimal(Count n);

/// base^exponent for base > 0 (0 when base is 0 and exponent > 0).
Decimal power(const Decimal& base, const Rational& exponent);
Decimal log2(const Decimal& x);

/// Scientific notation with `digits` significant digits, e.g.
/// "1.23456789012345678901234567890e+05". Deterministic across platforms.
std::string format_decimal(const Decimal& x, int digits = kDefaultSignificantDigits);

/// Fixed notation with exactly `places` digits after the point, rounded
/// half away from zero, e.g. "2.0000".
std::string format_fixed(const Decimal& x, int places);

}  // namespace affine_lab
