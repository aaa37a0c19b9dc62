#include "vects1/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fftw3.h>

namespace vects1 {

namespace {

template <class T>
double symmetry_tolerance(const std::vector<Complex<T>>& c, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return 0.0;
  } else {
    double scale = 0.0;
    for (const auto& z : c) scale = std::max(scale, abs(z));
    return tol * std::max(scale, 1.0);
  }
}

}  // namespace

template <class T>
FourierSeries<T>::FourierSeries(int max_freq)
    : max_freq_(max_freq), coeffs_(), real_flag_(true) {
  if (max_freq < 0) throw std::invalid_argument("max_freq must be nonnegative");
  coeffs_.assign(2 * static_cast<std::size_t>(max_freq) + 1, Scalar(T(0)));
}

template <class T>
FourierSeries<T>::FourierSeries(int max_freq, std::vector<Scalar> coeffs, bool real_flag)
    : max_freq_(max_freq), coeffs_(std::move(coeffs)), real_flag_(real_flag) {
  if (max_freq < 0) throw std::invalid_argument("max_freq must be nonnegative");
  if (coeffs_.size() != 2 * static_cast<std::size_t>(max_freq) + 1)
    throw std::invalid_argument("coefficient vector must have 2N+1 entries");
  if (real_flag_ && !is_real_symmetric(1e-13))
    throw std::invalid_argument("real_flag set but coefficients are not conjugate-symmetric");
}

template <class T>
FourierSeries<T> FourierSeries<T>::constant(const T& c) {
  return FourierSeries(0, {Scalar(c)}, true);
}

template <class T>
FourierSeries<T> FourierSeries<T>::exponential(int j, const Scalar& c) {
  const int n = std::abs(j);
  std::vector<Scalar> v(2 * static_cast<std::size_t>(n) + 1, Scalar(T(0)));
  v[j + n] = c;
  return FourierSeries(n, std::move(v)).with_real_flag(true);
}

template <class T>
FourierSeries<T> FourierSeries<T>::cos_mode(int j, const T& a) {
  const int n = std::abs(j);
  std::vector<Scalar> v(2 * static_cast<std::size_t>(n) + 1, Scalar(T(0)));
  if (n == 0) {
    v[0] = Scalar(a);
  } else {
    const T half = a / T(2);
    v[n + n] = Scalar(half);
    v[0] = Scalar(half);
  }
  return FourierSeries(n, std::move(v), true);
}

template <class T>
FourierSeries<T> FourierSeries<T>::sin_mode(int j, const T& a) {
  const int n = std::abs(j);
  std::vector<Scalar> v(2 * static_cast<std::size_t>(n) + 1, Scalar(T(0)));
  if (n != 0) {
    // sin(nx) = (e^{inx} - e^{-inx}) / 2i
    const T half = (j > 0 ? a : T(-a)) / T(2);
    v[n + n] = Scalar(T(0), -half);
    v[0] = Scalar(T(0), half);
  }
  return FourierSeries(n, std::move(v), true);
}

template <class T>
int FourierSeries<T>::bandwidth() const {
  for (int j = max_freq_; j >= 0; --j) {
    if (!coeffs_[max_freq_ + j].is_zero() || !coeffs_[max_freq_ - j].is_zero()) return j;
  }
  return -1;
}

template <class T>
typename FourierSeries<T>::Scalar FourierSeries<T>::operator[](int j) const {
  if (j < -max_freq_ || j > max_freq_) return Scalar(T(0));
  return coeffs_[j + max_freq_];
}

template <class T>
bool FourierSeries<T>::is_real_symmetric(double tol) const {
  const double eps = symmetry_tolerance(coeffs_, tol);
  for (int j = 0; j <= max_freq_; ++j) {
    const Scalar d = coeffs_[max_freq_ - j] - coeffs_[max_freq_ + j].conj();
    if constexpr (ScalarTraits<T>::exact) {
      if (!d.is_zero()) return false;
    } else {
      if (abs(d) > eps) return false;
    }
  }
  return true;
}

template <class T>
FourierSeries<T> FourierSeries<T>::resized(int max_freq) const {
  FourierSeries out(max_freq);
  const int n = std::min(max_freq, max_freq_);
  for (int j = -n; j <= n; ++j) out.coeffs_[j + max_freq] = coeffs_[j + max_freq_];
  out.real_flag_ = real_flag_;
  return out;
}

template <class T>
FourierSeries<T> FourierSeries<T>::with_real_flag(bool flag) const {
  FourierSeries out = *this;
  out.real_flag_ = flag && is_real_symmetric(1e-13);
  return out;
}

template <class T>
FourierSeries<T> FourierSeries<T>::operator-() const {
  FourierSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

template <class T>
FourierSeries<T>& FourierSeries<T>::operator+=(const FourierSeries& o) {
  if (o.max_freq_ > max_freq_) *this = resized(o.max_freq_);
  for (int j = -o.max_freq_; j <= o.max_freq_; ++j) coeffs_[j + max_freq_] += o.coeffs_[j + o.max_freq_];
  real_flag_ = real_flag_ && o.real_flag_;
  return *this;
}

template <class T>
FourierSeries<T>& FourierSeries<T>::operator-=(const FourierSeries& o) {
  if (o.max_freq_ > max_freq_) *this = resized(o.max_freq_);
  for (int j = -o.max_freq_; j <= o.max_freq_; ++j) coeffs_[j + max_freq_] -= o.coeffs_[j + o.max_freq_];
  real_flag_ = real_flag_ && o.real_flag_;
  return *this;
}

template <class T>
FourierSeries<T>& FourierSeries<T>::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  real_flag_ = real_flag_ && ScalarTraits<T>::is_zero(s.im);
  return *this;
}

template <class T>
bool FourierSeries<T>::equals(const FourierSeries& o) const {
  const int n = std::max(max_freq_, o.max_freq_);
  for (int j = -n; j <= n; ++j)
    if ((*this)[j] != o[j]) return false;
  return true;
}

template <class T>
double FourierSeries<T>::max_abs_diff(const FourierSeries& o) const {
  const int n = std::max(max_freq_, o.max_freq_);
  double d = 0.0;
  for (int j = -n; j <= n; ++j) d = std::max(d, abs((*this)[j] - o[j]));
  return d;
}

template <class T>
double FourierSeries<T>::max_abs() const {
  double d = 0.0;
  for (const auto& c : coeffs_) d = std::max(d, abs(c));
  return d;
}

template <class T>
std::complex<double> FourierSeries<T>::evaluate(double x) const {
  std::complex<double> sum = 0.0;
  for (int j = -max_freq_; j <= max_freq_; ++j) {
    const auto c = vects1::to_double(coeffs_[j + max_freq_]);
    sum += std::complex<double>(c.re, c.im) * std::polar(1.0, j * x);
  }
  return sum;
}

template <class T>
FourierSeries<double> FourierSeries<T>::to_double() const {
  std::vector<Complex<double>> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.push_back(vects1::to_double(z));
  return FourierSeries<double>(max_freq_, std::move(c)).with_real_flag(real_flag_);
}

template <class T>
FourierSeries<T> multiply(const FourierSeries<T>& f, const FourierSeries<T>& g, int out_max_freq) {
  if (out_max_freq < 0) throw std::invalid_argument("out_max_freq must be nonnegative");
  std::vector<Complex<T>> out(2 * static_cast<std::size_t>(out_max_freq) + 1, Complex<T>(T(0)));
  const int nf = f.max_freq(), ng = g.max_freq();
  const auto& cf = f.coeffs();
  const auto& cg = g.coeffs();
  for (int a = -nf; a <= nf; ++a) {
    const auto& fa = cf[a + nf];
    if (fa.is_zero()) continue;
    const int lo = std::max(-ng, -out_max_freq - a);
    const int hi = std::min(ng, out_max_freq - a);
    for (int b = lo; b <= hi; ++b) {
      const auto& gb = cg[b + ng];
      if (gb.is_zero()) continue;
      out[a + b + out_max_freq] += fa * gb;
    }
  }
  return FourierSeries<T>(out_max_freq, std::move(out))
      .with_real_flag(f.real_flag() && g.real_flag());
}

template <class T>
FourierSeries<T> multiply(const FourierSeries<T>& f, const FourierSeries<T>& g) {
  return multiply(f, g, f.max_freq() + g.max_freq());
}

template <class T>
FourierSeries<T> differentiate(const FourierSeries<T>& f, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
  return apply_symbol(f, [order](int j) { return i_power_times<T>(j, order); });
}

template <class T>
Complex<T> pairing(const FourierSeries<T>& f, const FourierSeries<T>& g) {
  const int n = std::min(f.max_freq(), g.max_freq());
  Complex<T> sum(T(0));
  for (int j = -n; j <= n; ++j) sum += f[j] * g[-j];
  return sum;
}

template <class T>
std::complex<double> l2_pair(const FourierSeries<T>& f, const FourierSeries<T>& g) {
  const auto p = vects1::to_double(pairing(f, g));
  return 2.0 * std::numbers::pi * std::complex<double>(p.re, p.im);
}

// ---------------------------------------------------------------------------
// Grid transforms

struct GridTransform::Plans {
  fftw_complex* buf = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

GridTransform::GridTransform(int num_points) : num_points_(num_points), plans_(new Plans) {
  if (num_points < 1) throw std::invalid_argument("num_points must be positive");
  plans_->buf = fftw_alloc_complex(static_cast<std::size_t>(num_points));
  plans_->forward = fftw_plan_dft_1d(num_points, plans_->buf, plans_->buf, FFTW_FORWARD, FFTW_ESTIMATE);
  plans_->backward = fftw_plan_dft_1d(num_points, plans_->buf, plans_->buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

GridTransform::~GridTransform() {
  if (!plans_) return;
  fftw_destroy_plan(plans_->backward);
  fftw_destroy_plan(plans_->forward);
  fftw_free(plans_->buf);
}

std::vector<std::complex<double>> GridTransform::to_grid(const FourierSeries<double>& f) const {
  const int p = num_points_;
  auto* buf = plans_->buf;
  for (int q = 0; q < p; ++q) buf[q][0] = buf[q][1] = 0.0;
  const int n = f.max_freq();
  for (int j = -n; j <= n; ++j) {
    const int idx = ((j % p) + p) % p;  // aliased frequencies accumulate
    buf[idx][0] += f[j].re;
    buf[idx][1] += f[j].im;
  }
  fftw_execute(plans_->backward);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(p));
  for (int q = 0; q < p; ++q) out[q] = {buf[q][0], buf[q][1]};
  return out;
}

std::vector<double> GridTransform::to_grid_real(const FourierSeries<double>& f) const {
  const auto z = to_grid(f);
  std::vector<double> out(z.size());
  std::transform(z.begin(), z.end(), out.begin(), [](const auto& c) { return c.real(); });
  return out;
}

FourierSeries<double> GridTransform::from_grid(const std::vector<std::complex<double>>& samples,
                                               int max_freq) const {
  const int p = num_points_;
  if (static_cast<int>(samples.size()) != p)
    throw std::invalid_argument("sample count does not match transform size");
  if (p < 2 * max_freq + 1)
    throw ResolutionError("need at least 2N+1 samples to recover bandwidth N");
  auto* buf = plans_->buf;
  for (int q = 0; q < p; ++q) {
    buf[q][0] = samples[q].real();
    buf[q][1] = samples[q].imag();
  }
  fftw_execute(plans_->forward);
  std::vector<Complex<double>> c(2 * static_cast<std::size_t>(max_freq) + 1);
  const double scale = 1.0 / p;
  for (int j = -max_freq; j <= max_freq; ++j) {
    const int idx = ((j % p) + p) % p;
    c[j + max_freq] = {buf[idx][0] * scale, buf[idx][1] * scale};
  }
  return FourierSeries<double>(max_freq, std::move(c));
}

FourierSeries<double> GridTransform::from_grid_real(const std::vector<double>& samples,
                                                    int max_freq) const {
  std::vector<std::complex<double>> z(samples.begin(), samples.end());
  auto f = from_grid(z, max_freq);
  // Enforce exact conjugate symmetry; FFT roundoff breaks it at the 1e-17 level.
  std::vector<Complex<double>> c(f.coeffs());
  c[max_freq].im = 0.0;
  for (int j = 1; j <= max_freq; ++j) c[max_freq - j] = c[max_freq + j].conj();
  return FourierSeries<double>(max_freq, std::move(c), true);
}

std::vector<std::complex<double>> grid_transform(const FourierSeries<double>& f, int num_points) {
  return GridTransform(num_points).to_grid(f);
}

FourierSeries<double> inverse_grid_transform(const std::vector<std::complex<double>>& samples,
                                             int max_freq) {
  return GridTransform(static_cast<int>(samples.size())).from_grid(samples, max_freq);
}

// ---------------------------------------------------------------------------
// JSON

template <class T>
nlohmann::json to_json(const FourierSeries<T>& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs()) {
    const auto d = vects1::to_double(c);
    coeffs.push_back({d.re, d.im});
  }
  return {{"N", f.max_freq()}, {"coeffs", coeffs}};
}

FourierSeries<double> series_from_json(const nlohmann::json& j) {
  const int n = j.at("N").get<int>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != 2 * static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("coeffs must hold 2N+1 [re, im] pairs");
  std::vector<Complex<double>> c;
  c.reserve(arr.size());
  for (const auto& z : arr) c.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  return FourierSeries<double>(n, std::move(c)).with_real_flag(true);
}

#define VECTS1_INSTANTIATE(T)                                                                  \
  template class FourierSeries<T>;                                                             \
  template FourierSeries<T> multiply(const FourierSeries<T>&, const FourierSeries<T>&, int);   \
  template FourierSeries<T> multiply(const FourierSeries<T>&, const FourierSeries<T>&);        \
  template FourierSeries<T> differentiate(const FourierSeries<T>&, int);                       \
  template Complex<T> pairing(const FourierSeries<T>&, const FourierSeries<T>&);               \
  template std::complex<double> l2_pair(const FourierSeries<T>&, const FourierSeries<T>&);     \
  template nlohmann::json to_json(const FourierSeries<T>&);

VECTS1_INSTANTIATE(double)
VECTS1_INSTANTIATE(Rational)

}  // namespace vects1
