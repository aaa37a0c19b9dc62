#ifndef VECTS1_INIT_EXPR_HPP
#define VECTS1_INIT_EXPR_HPP

// Small vocabulary for real trig polynomials on the command line:
// sums of "c", "a*cos(kx)", "b*sin(kx)" with optional '*', parentheses and
// 'x'. Accepted spellings include "2cos", "0.1sin", "1 + 0.5 sin 2x",
// "1/2*cos(3x) - sin x". Coefficients are read exactly as rationals.

#include <string>
#include <vector>

#include "vects1/fourier.hpp"

namespace vects1 {

struct TrigTerm {
  enum class Kind { Constant, Cos, Sin };
  Kind kind = Kind::Constant;
  int freq = 0;
  Rational coef;
};

/// Throws std::invalid_argument on malformed input.
std::vector<TrigTerm> parse_trig_expression(const std::string& text);

template <class T>
FourierSeries<T> build_series(const std::vector<TrigTerm>& terms);

template <class T>
FourierSeries<T> parse_series(const std::string& text) {
  return build_series<T>(parse_trig_expression(text));
}

}  // namespace vects1

#endif
