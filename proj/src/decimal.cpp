#include "affine_lab/decimal.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace affine_lab {

Decimal to_decimal(const Rational& r) {
  return Decimal(r.num().get_str()) / Decimal(r.den().get_str());
}

Decimal to_decimal(Count n) { return Decimal(n); }

Decimal power(const Decimal& base, const Rational& exponent) {
  if (base < 0) throw std::domain_error("power: negative base");
  if (base == 0) {
    if (exponent.sign() <= 0) throw std::domain_error("power: 0 to a non-positive exponent");
    return Decimal(0);
  }
  if (exponent.is_integer() && exponent.num().fits_slong_p()) {
    return boost::multiprecision::pow(base, static_cast<int>(exponent.num().get_si()));
  }
  return boost::multiprecision::exp(to_decimal(exponent) * boost::multiprecision::log(base));
}

Decimal log2(const Decimal& x) {
  if (x <= 0) throw std::domain_error("log2: non-positive argument");
  static const Decimal ln2 = boost::multiprecision::log(Decimal(2));
  return boost::multiprecision::log(x) / ln2;
}

std::string format_decimal(const Decimal& x, int digits) {
  if (digits < 1 || digits > kMaxSignificantDigits)
    throw std::invalid_argument("significant digits must lie in [1, " + std::to_string(kMaxSignificantDigits) + "]");
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << x;
  return os.str();
}

std::string format_fixed(const Decimal& x, int places) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(places) << x;
  std::string s = os.str();
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);  // "-0.0000"
  return s;
}

}  // namespace affine_lab
