#ifndef VECTS1_FOURIER_HPP
#define VECTS1_FOURIER_HPP

// Truncated Fourier series on the circle of period 2*pi.
//
// A series of bandwidth N stores c_j for j = -N..N and represents
// f(x) = sum_j c_j exp(i j x). The same type models vector fields u, v and
// densities m in the regular dual; the identification is through the
// complex-bilinear pairing <f, g> = int f g dx.

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "vects1/scalar.hpp"

namespace vects1 {

/// Thrown when a requested frequency window does not fit a truncation level.
class BandwidthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by grid transforms when the sample count cannot resolve the series.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
class FourierSeries {
 public:
  using Scalar = Complex<T>;

  FourierSeries() : FourierSeries(0) {}
  explicit FourierSeries(int max_freq);
  /// coeffs ordered j = -N..N; size must be 2N+1.
  FourierSeries(int max_freq, std::vector<Scalar> coeffs, bool real_flag = false);

  static FourierSeries zero(int max_freq = 0) { return FourierSeries(max_freq); }
  static FourierSeries constant(const T& c);
  /// c * exp(i j x)
  static FourierSeries exponential(int j, const Scalar& c = Scalar(T(1)));
  /// a * cos(j x)
  static FourierSeries cos_mode(int j, const T& a = T(1));
  /// a * sin(j x)
  static FourierSeries sin_mode(int j, const T& a = T(1));

  int max_freq() const { return max_freq_; }
  /// Highest |j| with c_j != 0, or -1 for the zero series.
  int bandwidth() const;
  bool real_flag() const { return real_flag_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// c_j, or zero when |j| exceeds the stored bandwidth.
  Scalar operator[](int j) const;

  /// True when c_{-j} == conj(c_j) for every j (exactly, or to `tol` in float mode).
  bool is_real_symmetric(double tol = 0.0) const;

  /// Re-truncates or zero-pads to `max_freq`.
  FourierSeries resized(int max_freq) const;
  /// Copy whose real_flag is `flag` and'ed with an actual symmetry check.
  FourierSeries with_real_flag(bool flag) const;

  FourierSeries operator-() const;
  FourierSeries& operator+=(const FourierSeries& o);
  FourierSeries& operator-=(const FourierSeries& o);
  FourierSeries& operator*=(const Scalar& s);

  friend FourierSeries operator+(FourierSeries a, const FourierSeries& b) { return a += b; }
  friend FourierSeries operator-(FourierSeries a, const FourierSeries& b) { return a -= b; }
  friend FourierSeries operator*(const Scalar& s, FourierSeries a) { return a *= s; }
  friend FourierSeries operator*(FourierSeries a, const Scalar& s) { return a *= s; }

  /// Equality as functions: bandwidth padding is ignored.
  bool equals(const FourierSeries& o) const;
  /// max_j |c_j(this) - c_j(o)|
  double max_abs_diff(const FourierSeries& o) const;
  double max_abs() const;

  /// f(x), evaluated in double precision.
  std::complex<double> evaluate(double x) const;

  FourierSeries<double> to_double() const;

 private:
  int max_freq_;
  std::vector<Scalar> coeffs_;
  bool real_flag_;
};

template <class T>
using Series = FourierSeries<T>;

/// Pointwise product truncated to |j| <= out_max_freq (exact when
/// out_max_freq >= N_f + N_g).
template <class T>
FourierSeries<T> multiply(const FourierSeries<T>& f, const FourierSeries<T>& g, int out_max_freq);

/// Pointwise product at full bandwidth N_f + N_g.
template <class T>
FourierSeries<T> multiply(const FourierSeries<T>& f, const FourierSeries<T>& g);

/// d^order f / dx^order
template <class T>
FourierSeries<T> differentiate(const FourierSeries<T>& f, int order = 1);

/// Applies the Fourier multiplier c_j -> symbol(j) c_j.
template <class T, class Symbol>
FourierSeries<T> apply_symbol(const FourierSeries<T>& f, Symbol&& symbol) {
  std::vector<Complex<T>> out(f.coeffs().size());
  const int n = f.max_freq();
  for (int j = -n; j <= n; ++j) out[j + n] = symbol(j) * f[j];
  return FourierSeries<T>(n, std::move(out)).with_real_flag(f.real_flag());
}

/// sum_j c_j(f) c_{-j}(g), i.e. the pairing int f g dx divided by 2*pi.
/// Complex-bilinear: no conjugation.
template <class T>
Complex<T> pairing(const FourierSeries<T>& f, const FourierSeries<T>& g);

/// int f g dx over the circle = 2*pi * pairing(f, g).
template <class T>
std::complex<double> l2_pair(const FourierSeries<T>& f, const FourierSeries<T>& g);

/// The mean coefficient c_0 = (1/2pi) int f dx.
template <class T>
Complex<T> mean(const FourierSeries<T>& f) {
  return f[0];
}

/// Cached FFTW plans for one sample count. Samples sit at x_p = 2 pi p / P.
class GridTransform {
 public:
  explicit GridTransform(int num_points);
  ~GridTransform();
  GridTransform(const GridTransform&) = delete;
  GridTransform& operator=(const GridTransform&) = delete;

  int num_points() const { return num_points_; }

  /// Samples of f; frequencies must satisfy |j| < P/2 unless aliasing is intended.
  std::vector<std::complex<double>> to_grid(const FourierSeries<double>& f) const;
  std::vector<double> to_grid_real(const FourierSeries<double>& f) const;

  /// Recovers the coefficients |j| <= max_freq from samples. Requires
  /// P >= 2*max_freq + 1.
  FourierSeries<double> from_grid(const std::vector<std::complex<double>>& samples,
                                  int max_freq) const;
  FourierSeries<double> from_grid_real(const std::vector<double>& samples, int max_freq) const;

 private:
  struct Plans;
  int num_points_;
  std::unique_ptr<Plans> plans_;
};

/// One-shot forms of GridTransform.
std::vector<std::complex<double>> grid_transform(const FourierSeries<double>& f, int num_points);
FourierSeries<double> inverse_grid_transform(const std::vector<std::complex<double>>& samples,
                                             int max_freq);

/// {"N": int, "coeffs": [[re, im], ...]} ordered j = -N..N.
template <class T>
nlohmann::json to_json(const FourierSeries<T>& f);
FourierSeries<double> series_from_json(const nlohmann::json& j);

}  // namespace vects1

#endif
