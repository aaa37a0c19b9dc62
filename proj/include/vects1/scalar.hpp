#ifndef VECTS1_SCALAR_HPP
#define VECTS1_SCALAR_HPP

// Scalar fields used by the library: IEEE double for numerics, GMP rationals
// for zero-tolerance verification. Complex numbers over either field use the
// small Complex<T> below since std::complex is only specified for floating
// point types.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace vects1 {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Arithmetic mode selected at construction of every numeric object.
enum class Mode { Float, Rational };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Mode mode = Mode::Float;
  static double from_int(std::int64_t v) { return static_cast<double>(v); }
  static double from_ratio(std::int64_t p, std::int64_t q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return v == 0.0; }
  static std::string str(double v);
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Mode mode = Mode::Rational;
  static Rational from_int(std::int64_t v) { return Rational(v); }
  static Rational from_ratio(std::int64_t p, std::int64_t q) { return Rational(p) / Rational(q); }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static std::string str(const Rational& v) { return v.str(); }
};

/// Parses "3", "-1/2", "0.25", "1e-3" into an exact rational. Decimal input is
/// taken at face value (0.1 is 1/10, not the nearest double).
Rational parse_rational(const std::string& text);

template <class T>
T parse_scalar(const std::string& text);

/// Complex number over an arbitrary ordered field.
template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im() {}  // NOLINT: implicit embedding of reals
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(T(0), T(1)); }

  Complex conj() const { return Complex(re, -im); }
  bool is_zero() const { return ScalarTraits<T>::is_zero(re) && ScalarTraits<T>::is_zero(im); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T den = o.re * o.re + o.im * o.im;
    if (ScalarTraits<T>::is_zero(den)) throw std::domain_error("complex division by zero");
    T r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << ScalarTraits<T>::str(z.re) << ',' << ScalarTraits<T>::str(z.im) << ')';
  }
};

/// Modulus, evaluated in double precision for both fields.
template <class T>
double abs(const Complex<T>& z) {
  return std::hypot(ScalarTraits<T>::to_double(z.re), ScalarTraits<T>::to_double(z.im));
}

/// (i j)^p for integer j.
template <class T>
Complex<T> i_power_times(std::int64_t j, int p) {
  Complex<T> out(T(1));
  const Complex<T> ij(T(0), ScalarTraits<T>::from_int(j));
  for (int q = 0; q < p; ++q) out *= ij;
  return out;
}

template <class T>
Complex<double> to_double(const Complex<T>& z) {
  return {ScalarTraits<T>::to_double(z.re), ScalarTraits<T>::to_double(z.im)};
}

}  // namespace vects1

#endif
