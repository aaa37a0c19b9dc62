#include "vects1/scalar.hpp"

#include <cctype>
#include <cstdio>

namespace vects1 {

std::string ScalarTraits<double>::str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty number");

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = parse_rational(s.substr(0, slash));
    const Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';

  boost::multiprecision::mpz_int digits = 0;
  int frac_digits = 0;
  bool any_digit = false;
  bool in_fraction = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (in_fraction) ++frac_digits;
    } else if (c == '.' && !in_fraction) {
      in_fraction = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("not a number: '" + text + "'");

  long exponent = -frac_digits;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("not a number: '" + text + "'");
    std::size_t used = 0;
    const std::string tail = s.substr(pos + 1);
    long e = 0;
    try {
      e = std::stol(tail, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + text + "'");
    }
    if (used != tail.size()) throw std::invalid_argument("bad exponent in '" + text + "'");
    exponent += e;
  }

  Rational value(digits);
  const boost::multiprecision::mpz_int ten = 10;
  if (exponent > 0) value *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(exponent)));
  if (exponent < 0) value /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

template <>
double parse_scalar<double>(const std::string& text) {
  return parse_rational(text).convert_to<double>();
}

template <>
Rational parse_scalar<Rational>(const std::string& text) {
  return parse_rational(text);
}

}  // namespace vects1
