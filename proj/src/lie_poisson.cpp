#include "vects1/lie_poisson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "vects1/parallel.hpp"

namespace vects1 {

template <class T>
FourierSeries<T> lie_bracket(const FourierSeries<T>& u, const FourierSeries<T>& v) {
  return multiply(u, differentiate(v)) - multiply(differentiate(u), v);
}

template <class T>
OperatorMatrix<T> op_J(const FourierSeries<T>& m, int max_freq) {
  const auto mult = op_mult(m, max_freq);
  const auto d = op_derivative<T>(max_freq);
  return compose(mult, d) + compose(d, mult);
}

template <class T>
OperatorMatrix<T> op_K(const CocycleSpec<T>& spec, int max_freq) {
  auto k = op_J(spec.m0, max_freq);
  if (!ScalarTraits<T>::is_zero(spec.beta)) k += Complex<T>(spec.beta) * op_derivative<T>(max_freq, 3);
  return k;
}

namespace {

/// <e^{i p x} coefficient series s, K e^{icx}> / 2pi using column c of K.
template <class T>
Complex<T> pair_with_column(const FourierSeries<T>& s, const OperatorMatrix<T>& k, int c) {
  const int n = k.max_freq();
  Complex<T> sum(T(0));
  for (int j = -n; j <= n; ++j) {
    const auto& e = k(j, c);
    if (!e.is_zero()) sum += s[-j] * e;
  }
  return sum;
}

}  // namespace

template <class T>
Complex<T> jacobi_defect(const OperatorMatrix<T>& k, int a, int b, int c) {
  const int n = k.max_freq();
  for (int f : {a, b, c, a + b, b + c, c + a})
    if (std::abs(f) > n) throw BandwidthError("triple frequencies exceed operator bandwidth");
  const auto u = FourierSeries<T>::exponential(a);
  const auto v = FourierSeries<T>::exponential(b);
  const auto w = FourierSeries<T>::exponential(c);
  return pair_with_column(lie_bracket(u, v), k, c) + pair_with_column(lie_bracket(v, w), k, a) +
         pair_with_column(lie_bracket(w, u), k, b);
}

template <class T>
CocycleReport verify_cocycle(const OperatorMatrix<T>& k, int triple_range, std::string label) {
  if (triple_range < 0) throw std::invalid_argument("triple range must be nonnegative");
  if (2 * triple_range > k.max_freq())
    throw BandwidthError("operator bandwidth must be at least twice the triple range");
  const int width = 2 * triple_range + 1;
  std::vector<double> max_per_a(static_cast<std::size_t>(width), 0.0);
  std::vector<char> exact_per_a(static_cast<std::size_t>(width), 1);
  parallel_for(static_cast<std::size_t>(width), [&](std::size_t ia) {
    const int a = static_cast<int>(ia) - triple_range;
    for (int b = -triple_range; b <= triple_range; ++b) {
      for (int c = -triple_range; c <= triple_range; ++c) {
        const auto d = jacobi_defect(k, a, b, c);
        max_per_a[ia] = std::max(max_per_a[ia], abs(d));
        if (!d.is_zero()) exact_per_a[ia] = 0;
      }
    }
  });
  CocycleReport r;
  r.spec = std::move(label);
  r.max_freq = k.max_freq();
  r.triple_range = triple_range;
  r.max_defect = *std::max_element(max_per_a.begin(), max_per_a.end());
  r.exact_zero = std::all_of(exact_per_a.begin(), exact_per_a.end(), [](char e) { return e != 0; });
  r.triples_checked = static_cast<long>(width) * width * width;
  return r;
}

nlohmann::json to_json(const CocycleReport& r) {
  return {{"schema", 1},
          {"spec", r.spec},
          {"N", r.max_freq},
          {"triple_range", r.triple_range},
          {"max_defect", r.max_defect},
          {"exact_zero", r.exact_zero},
          {"triples_checked", r.triples_checked}};
}

RegularFunctional linear_functional(const FourierSeries<double>& u) {
  return {"linear",
          [u](const FourierSeries<double>& m) { return l2_pair(u, m).real(); },
          [u](const FourierSeries<double>&) { return u; }};
}

double poisson_bracket(const RegularFunctional& f, const RegularFunctional& g,
                       const FourierSeries<double>& m, const OperatorMatrix<double>& structure) {
  return l2_pair(f.gradient(m), structure.apply(g.gradient(m))).real();
}

StructureAt canonical_structure(int max_freq) {
  return [max_freq](const FourierSeries<double>& m) { return op_J(m, max_freq); };
}

FourierSeries<double> hamiltonian_field(const RegularFunctional& f, const StructureAt& structure_at,
                                        const FourierSeries<double>& m) {
  return structure_at(m).apply(f.gradient(m));
}

std::vector<FourierSeries<double>> default_directions() {
  using S = FourierSeries<double>;
  return {S::constant(1.0), S::sin_mode(1), S::cos_mode(1), S::sin_mode(2), S::cos_mode(2)};
}

namespace {

FourierSeries<double> gradient_derivative(const RegularFunctional& f, const FourierSeries<double>& m,
                                          const FourierSeries<double>& dir, double step) {
  const auto plus = f.gradient(m + step * dir);
  const auto minus = f.gradient(m - step * dir);
  return (1.0 / (2.0 * step)) * (plus - minus);
}

}  // namespace

double gradient_symmetry_check(const RegularFunctional& f, const FourierSeries<double>& m,
                               const std::vector<FourierSeries<double>>& dirs, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<FourierSeries<double>> derivs;
  derivs.reserve(dirs.size());
  for (const auto& d : dirs) derivs.push_back(gradient_derivative(f, m, d, step));
  double worst = 0.0;
  for (std::size_t p = 0; p < dirs.size(); ++p) {
    for (std::size_t q = p + 1; q < dirs.size(); ++q) {
      const auto lhs = l2_pair(derivs[p], dirs[q]);
      const auto rhs = l2_pair(derivs[q], dirs[p]);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double gradient_audit(const RegularFunctional& f, const FourierSeries<double>& m,
                      const std::vector<FourierSeries<double>>& dirs, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const auto grad = f.gradient(m);
  double worst = 0.0;
  for (const auto& d : dirs) {
    const double fd = (f.value(m + step * d) - f.value(m - step * d)) / (2.0 * step);
    const double exact = l2_pair(d, grad).real();
    worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
  }
  return worst;
}

#define VECTS1_INSTANTIATE(T)                                                              \
  template FourierSeries<T> lie_bracket(const FourierSeries<T>&, const FourierSeries<T>&); \
  template OperatorMatrix<T> op_J(const FourierSeries<T>&, int);                           \
  template OperatorMatrix<T> op_K(const CocycleSpec<T>&, int);                             \
  template Complex<T> jacobi_defect(const OperatorMatrix<T>&, int, int, int);              \
  template CocycleReport verify_cocycle(const OperatorMatrix<T>&, int, std::string);

VECTS1_INSTANTIATE(double)
VECTS1_INSTANTIATE(Rational)

}  // namespace vects1
