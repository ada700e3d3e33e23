#ifndef GQE_RATIONAL_HPP
#define GQE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "gqe/error.hpp"

namespace gqe {

/// Exact field for every polynomial coefficient. Always kept in lowest terms
/// with a positive denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Working precision for the transcendental stage (the k-equation and F).
using Real = boost::multiprecision::mpfr_float_100;

inline int sign(const Rational &q) { return q.sign(); }

inline Real to_real(const Rational &q) { return Real(q); }

inline double to_double(const Rational &q) { return q.convert_to<double>(); }

/// Exact rational value of a binary double.
inline Rational from_double(double v) {
  if (!std::isfinite(v))
    throw Error(ErrorKind::InvalidInput, "non-finite value");
  return Rational(v);
}

/// GMP reads a leading 0 as an octal prefix; strip it.
inline Integer decimal_integer(std::string digits) {
  bool negative = !digits.empty() && digits[0] == '-';
  if (negative)
    digits.erase(0, 1);
  auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  Integer v(digits);
  return negative ? Integer(-v) : v;
}

/// Parses "p/q", integers and decimals ("-0.75", "1.5e-3") exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::InvalidInput,
                "not a rational or decimal: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
    ++start;
  s = s.substr(start);
  if (s.empty())
    return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    auto is_int = [](const std::string &t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i >= t.size())
        return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
          return false;
      return true;
    };
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      return fail();
    if (num[0] == '+')
      num.erase(0, 1);
    if (den[0] == '+')
      den.erase(0, 1);
    Integer d = decimal_integer(den);
    if (d == 0)
      throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
    return Rational(decimal_integer(num), d);
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long long scale = 0;
  bool any = false, point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any = true;
      if (point)
        --scale;
    } else if (c == '.' && !point) {
      point = true;
    } else {
      break;
    }
  }
  if (!any)
    return fail();
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E')
      return fail();
    ++i;
    long long exponent = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr != s.data() + s.size() || i == s.size())
      return fail();
    if (std::llabs(exponent) > 100000)
      return fail();
    scale += exponent;
  }
  Rational value{decimal_integer(digits)};
  if (scale != 0) {
    Integer p = boost::multiprecision::pow(Integer(10),
                                           static_cast<unsigned>(std::llabs(scale)));
    value = scale > 0 ? value * Rational(p) : value / Rational(p);
  }
  return negative ? Rational(-value) : value;
}

/// Terminating decimals print as decimals, everything else as "p/q".
inline std::string to_string(const Rational &q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1)
    return num.str();
  Integer rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1)
    return num.str() + "/" + den.str();
  unsigned places = std::max(twos, fives);
  Integer scaled = num * boost::multiprecision::pow(Integer(10), places) / den;
  bool negative = scaled < 0;
  std::string digits = Integer(boost::multiprecision::abs(scaled)).str();
  if (digits.size() <= places)
    digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

/// Shortest decimal that round-trips the double.
inline std::string to_string(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

} // namespace gqe

#endif
