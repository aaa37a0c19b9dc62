#ifndef VECTS1_OPERATOR_HPP
#define VECTS1_OPERATOR_HPP

// Dense matrices for linear operators on span{exp(i j x) : |j| <= N}.
//
// entries(j, l) is the e^{ijx} coefficient of Op(e^{ilx}). The adjoint here
// is taken with respect to the complex-bilinear pairing, not the hermitian
// one: <P f, g> = <f, P* g> gives P*(j, l) = P(-l, -j).

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vects1/fourier.hpp"

namespace vects1 {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
class OperatorMatrix {
 public:
  using Scalar = Complex<T>;

  explicit OperatorMatrix(int max_freq = 0);

  static OperatorMatrix identity(int max_freq);

  int max_freq() const { return n_; }
  int dim() const { return 2 * n_ + 1; }

  const Scalar& operator()(int j, int l) const { return data_[index(j, l)]; }
  Scalar& operator()(int j, int l) { return data_[index(j, l)]; }

  /// Action on a series; the input is truncated or padded to bandwidth N.
  FourierSeries<T> apply(const FourierSeries<T>& f) const;

  OperatorMatrix& operator+=(const OperatorMatrix& o);
  OperatorMatrix& operator-=(const OperatorMatrix& o);
  OperatorMatrix& operator*=(const Scalar& s);
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(const Scalar& s, OperatorMatrix a) { return a *= s; }

  bool equals(const OperatorMatrix& o) const;
  double max_abs() const;
  double max_abs_diff(const OperatorMatrix& o) const;
  bool is_zero() const;

  OperatorMatrix<double> to_double() const;

 private:
  std::size_t index(int j, int l) const {
    return static_cast<std::size_t>(j + n_) * static_cast<std::size_t>(dim()) +
           static_cast<std::size_t>(l + n_);
  }

  int n_;
  std::vector<Scalar> data_;
};

/// Diagonal (Fourier multiplier) operator with entries symbol(j).
template <class T>
OperatorMatrix<T> op_from_symbol(const std::function<Complex<T>(int)>& symbol, int max_freq);

/// Diagonal operator with entries 1/symbol(j); throws std::domain_error on a
/// vanishing symbol value.
template <class T>
OperatorMatrix<T> op_inverse_symbol(const std::function<Complex<T>(int)>& symbol, int max_freq);

/// D^order as a diagonal matrix with entries (i j)^order.
template <class T>
OperatorMatrix<T> op_derivative(int max_freq, int order = 1);

/// Multiplication by m, truncated: entries(j, l) = c_{j-l}(m).
template <class T>
OperatorMatrix<T> op_mult(const FourierSeries<T>& m, int max_freq);

/// sum_i s_i * A_i
template <class T>
OperatorMatrix<T> combine(const std::vector<std::pair<Complex<T>, OperatorMatrix<T>>>& terms);

/// A after B.
template <class T>
OperatorMatrix<T> compose(const OperatorMatrix<T>& a, const OperatorMatrix<T>& b);

template <class T>
OperatorMatrix<T> bilinear_adjoint(const OperatorMatrix<T>& p);

/// max_{j,l} |P(j,l) - P*(j,l)|; zero iff P is symmetric for the bilinear pairing.
template <class T>
double symmetry_defect(const OperatorMatrix<T>& p);

/// Exact symmetry test in rational mode; float mode uses the operator
/// equality tolerance 1e-12 * (1 + max entry).
template <class T>
bool is_symmetric(const OperatorMatrix<T>& p);

/// Operator equality: exact in rational mode, max entry difference
/// <= 1e-12 * (1 + max entry) in float mode.
template <class T>
bool operators_equal(const OperatorMatrix<T>& a, const OperatorMatrix<T>& b);

/// Row-major CSV dump for debugging: one matrix row per line, each cell a
/// quoted "re,im" pair. Rows and columns run over j = -N..N.
template <class T>
void write_csv(std::ostream& os, const OperatorMatrix<T>& p);

}  // namespace vects1

#endif
