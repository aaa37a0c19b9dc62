#include "vects1/operator.hpp"

#include <algorithm>
#include <ostream>

namespace vects1 {

template <class T>
OperatorMatrix<T>::OperatorMatrix(int max_freq) : n_(max_freq) {
  if (max_freq < 0) throw std::invalid_argument("max_freq must be nonnegative");
  data_.assign(static_cast<std::size_t>(dim()) * static_cast<std::size_t>(dim()), Scalar(T(0)));
}

template <class T>
OperatorMatrix<T> OperatorMatrix<T>::identity(int max_freq) {
  OperatorMatrix out(max_freq);
  for (int j = -max_freq; j <= max_freq; ++j) out(j, j) = Scalar(T(1));
  return out;
}

template <class T>
FourierSeries<T> OperatorMatrix<T>::apply(const FourierSeries<T>& f) const {
  std::vector<Scalar> out(static_cast<std::size_t>(dim()), Scalar(T(0)));
  const int lim = std::min(n_, f.max_freq());
  for (int l = -lim; l <= lim; ++l) {
    const Scalar fl = f[l];
    if (fl.is_zero()) continue;
    for (int j = -n_; j <= n_; ++j) {
      const Scalar& e = (*this)(j, l);
      if (!e.is_zero()) out[j + n_] += e * fl;
    }
  }
  return FourierSeries<T>(n_, std::move(out));
}

template <class T>
OperatorMatrix<T>& OperatorMatrix<T>::operator+=(const OperatorMatrix& o) {
  if (o.n_ != n_) throw DimensionMismatch("operator sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

template <class T>
OperatorMatrix<T>& OperatorMatrix<T>::operator-=(const OperatorMatrix& o) {
  if (o.n_ != n_) throw DimensionMismatch("operator sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

template <class T>
OperatorMatrix<T>& OperatorMatrix<T>::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

template <class T>
bool OperatorMatrix<T>::equals(const OperatorMatrix& o) const {
  return n_ == o.n_ && data_ == o.data_;
}

template <class T>
double OperatorMatrix<T>::max_abs() const {
  double m = 0.0;
  for (const auto& e : data_) m = std::max(m, abs(e));
  return m;
}

template <class T>
double OperatorMatrix<T>::max_abs_diff(const OperatorMatrix& o) const {
  if (o.n_ != n_) throw DimensionMismatch("operator sizes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, abs(data_[i] - o.data_[i]));
  return m;
}

template <class T>
bool OperatorMatrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& e) { return e.is_zero(); });
}

template <class T>
OperatorMatrix<double> OperatorMatrix<T>::to_double() const {
  OperatorMatrix<double> out(n_);
  for (int j = -n_; j <= n_; ++j)
    for (int l = -n_; l <= n_; ++l) out(j, l) = vects1::to_double((*this)(j, l));
  return out;
}

template <class T>
OperatorMatrix<T> op_from_symbol(const std::function<Complex<T>(int)>& symbol, int max_freq) {
  OperatorMatrix<T> out(max_freq);
  for (int j = -max_freq; j <= max_freq; ++j) out(j, j) = symbol(j);
  return out;
}

template <class T>
OperatorMatrix<T> op_inverse_symbol(const std::function<Complex<T>(int)>& symbol, int max_freq) {
  OperatorMatrix<T> out(max_freq);
  for (int j = -max_freq; j <= max_freq; ++j) {
    const Complex<T> s = symbol(j);
    if (s.is_zero()) throw std::domain_error("symbol vanishes at j = " + std::to_string(j));
    out(j, j) = Complex<T>(T(1)) / s;
  }
  return out;
}

template <class T>
OperatorMatrix<T> op_derivative(int max_freq, int order) {
  return op_from_symbol<T>([order](int j) { return i_power_times<T>(j, order); }, max_freq);
}

template <class T>
OperatorMatrix<T> op_mult(const FourierSeries<T>& m, int max_freq) {
  OperatorMatrix<T> out(max_freq);
  const int bw = m.max_freq();
  for (int l = -max_freq; l <= max_freq; ++l) {
    const int lo = std::max(-max_freq, l - bw);
    const int hi = std::min(max_freq, l + bw);
    for (int j = lo; j <= hi; ++j) out(j, l) = m[j - l];
  }
  return out;
}

template <class T>
OperatorMatrix<T> combine(const std::vector<std::pair<Complex<T>, OperatorMatrix<T>>>& terms) {
  if (terms.empty()) throw std::invalid_argument("combine needs at least one term");
  OperatorMatrix<T> out(terms.front().second.max_freq());
  for (const auto& [s, op] : terms) {
    if (op.max_freq() != out.max_freq()) throw DimensionMismatch("operator sizes differ");
    out += s * op;
  }
  return out;
}

template <class T>
OperatorMatrix<T> compose(const OperatorMatrix<T>& a, const OperatorMatrix<T>& b) {
  if (a.max_freq() != b.max_freq()) throw DimensionMismatch("operator sizes differ");
  const int n = a.max_freq();
  OperatorMatrix<T> out(n);
  // Skipping zero entries keeps banded and diagonal products cheap in rational mode.
  for (int j = -n; j <= n; ++j) {
    for (int q = -n; q <= n; ++q) {
      const Complex<T>& ajq = a(j, q);
      if (ajq.is_zero()) continue;
      for (int l = -n; l <= n; ++l) {
        const Complex<T>& bql = b(q, l);
        if (!bql.is_zero()) out(j, l) += ajq * bql;
      }
    }
  }
  return out;
}

template <class T>
OperatorMatrix<T> bilinear_adjoint(const OperatorMatrix<T>& p) {
  const int n = p.max_freq();
  OperatorMatrix<T> out(n);
  for (int j = -n; j <= n; ++j)
    for (int l = -n; l <= n; ++l) out(j, l) = p(-l, -j);
  return out;
}

template <class T>
double symmetry_defect(const OperatorMatrix<T>& p) {
  const int n = p.max_freq();
  double d = 0.0;
  for (int j = -n; j <= n; ++j)
    for (int l = -n; l <= n; ++l) d = std::max(d, abs(p(j, l) - p(-l, -j)));
  return d;
}

template <class T>
bool operators_equal(const OperatorMatrix<T>& a, const OperatorMatrix<T>& b) {
  if constexpr (ScalarTraits<T>::exact) {
    return a.equals(b);
  } else {
    if (a.max_freq() != b.max_freq()) return false;
    const double scale = std::max(a.max_abs(), b.max_abs());
    return a.max_abs_diff(b) <= 1e-12 * (1.0 + scale);
  }
}

template <class T>
bool is_symmetric(const OperatorMatrix<T>& p) {
  return operators_equal(p, bilinear_adjoint(p));
}

template <class T>
void write_csv(std::ostream& os, const OperatorMatrix<T>& p) {
  const int n = p.max_freq();
  for (int j = -n; j <= n; ++j) {
    for (int l = -n; l <= n; ++l) {
      const auto& e = p(j, l);
      if (l > -n) os << ',';
      os << '"' << ScalarTraits<T>::str(e.re) << ',' << ScalarTraits<T>::str(e.im) << '"';
    }
    os << '\n';
  }
}

#define VECTS1_INSTANTIATE(T)                                                                     \
  template class OperatorMatrix<T>;                                                               \
  template OperatorMatrix<T> op_from_symbol(const std::function<Complex<T>(int)>&, int);          \
  template OperatorMatrix<T> op_inverse_symbol(const std::function<Complex<T>(int)>&, int);       \
  template OperatorMatrix<T> op_derivative<T>(int, int);                                          \
  template OperatorMatrix<T> op_mult(const FourierSeries<T>&, int);                               \
  template OperatorMatrix<T> combine(const std::vector<std::pair<Complex<T>, OperatorMatrix<T>>>&); \
  template OperatorMatrix<T> compose(const OperatorMatrix<T>&, const OperatorMatrix<T>&);         \
  template OperatorMatrix<T> bilinear_adjoint(const OperatorMatrix<T>&);                          \
  template double symmetry_defect(const OperatorMatrix<T>&);                                      \
  template bool is_symmetric(const OperatorMatrix<T>&);                                           \
  template bool operators_equal(const OperatorMatrix<T>&, const OperatorMatrix<T>&);              \
  template void write_csv(std::ostream&, const OperatorMatrix<T>&);

VECTS1_INSTANTIATE(double)
VECTS1_INSTANTIATE(Rational)

}  // namespace vects1
