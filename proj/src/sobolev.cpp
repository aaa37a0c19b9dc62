#include "vects1/sobolev.hpp"

#include <numbers>
#include <stdexcept>

namespace vects1 {

std::int64_t sobolev_symbol(int k, std::int64_t r) {
  if (k < 0) throw std::invalid_argument("Sobolev index must be nonnegative");
  std::int64_t r2 = 0;
  if (__builtin_mul_overflow(r, r, &r2)) throw std::overflow_error("f_k(r) overflows int64");
  std::int64_t sum = 0;
  std::int64_t power = 1;
  for (int i = 0; i <= k; ++i) {
    if (__builtin_add_overflow(sum, power, &sum)) throw std::overflow_error("f_k(r) overflows int64");
    if (i < k && __builtin_mul_overflow(power, r2, &power))
      throw std::overflow_error("f_k(r) overflows int64");
  }
  return sum;
}

Rational sobolev_symbol_closed_form(int k, std::int64_t r) {
  if (r == 1 || r == -1) throw std::domain_error("closed form of f_k is indeterminate at r = +-1");
  const Rational r2 = Rational(r) * Rational(r);
  Rational num = 1;
  for (int i = 0; i <= k; ++i) num *= r2;
  return (num - 1) / (r2 - 1);
}

template <class T>
OperatorMatrix<T> op_A(int k, int max_freq) {
  return op_from_symbol<T>([k](int j) { return Complex<T>(sobolev_symbol_as<T>(k, j)); }, max_freq);
}

template <class T>
OperatorMatrix<T> op_A_inverse(int k, int max_freq) {
  return op_inverse_symbol<T>([k](int j) { return Complex<T>(sobolev_symbol_as<T>(k, j)); },
                              max_freq);
}

template <class T>
FourierSeries<T> apply_A(const FourierSeries<T>& f, int k) {
  return apply_symbol(f, [k](int j) { return Complex<T>(sobolev_symbol_as<T>(k, j)); });
}

template <class T>
FourierSeries<T> apply_A_inverse(const FourierSeries<T>& f, int k) {
  return apply_symbol(f, [k](int j) { return Complex<T>(T(1) / sobolev_symbol_as<T>(k, j)); });
}

SobolevInner sobolev_inner_both(const FourierSeries<double>& u, const FourierSeries<double>& v,
                                int k) {
  double sum = 0.0;
  for (int i = 0; i <= k; ++i) sum += l2_pair(differentiate(u, i), differentiate(v, i)).real();
  return {sum, l2_pair(apply_A(u, k), v).real()};
}

double sobolev_inner(const FourierSeries<double>& u, const FourierSeries<double>& v, int k) {
  return sobolev_inner_both(u, v, k).by_operator;
}

std::pair<double, FourierSeries<double>> h_k_eval(const FourierSeries<double>& m, int k) {
  auto u = apply_A_inverse(m, k);
  const double value = 0.5 * l2_pair(m, u).real();
  return {value, std::move(u)};
}

RegularFunctional h_k_functional(int k) {
  return {"h" + std::to_string(k),
          [k](const FourierSeries<double>& m) { return h_k_eval(m, k).first; },
          [k](const FourierSeries<double>& m) { return apply_A_inverse(m, k); }};
}

template <class T>
FourierSeries<T> X_k_field(const FourierSeries<T>& m, int k) {
  const auto u = apply_A_inverse(m, k);
  const Complex<T> two(T(2));
  return two * multiply(m, differentiate(u)) + multiply(u, differentiate(m));
}

template <class T>
OperatorMatrix<T> dX_k_operator(const FourierSeries<T>& m, int k, int max_freq) {
  const auto u = apply_A_inverse(m, k);
  const Complex<T> two(T(2));
  const auto d = op_derivative<T>(max_freq);
  const auto a_inv = op_A_inverse<T>(k, max_freq);
  return combine<T>({
      {two, op_mult(differentiate(u), max_freq)},
      {Complex<T>(T(1)), compose(op_mult(u, max_freq), d)},
      {two, compose(op_mult(m, max_freq), compose(d, a_inv))},
      {Complex<T>(T(1)), compose(op_mult(differentiate(m), max_freq), a_inv)},
  });
}

template <class T>
FourierSeries<T> second_hamiltonian_gradient(const FourierSeries<T>& m, SecondHamiltonian which) {
  const Complex<T> three_halves(ScalarTraits<T>::from_ratio(3, 2));
  if (which == SecondHamiltonian::H0) return three_halves * multiply(m, m);
  const Complex<T> half(ScalarTraits<T>::from_ratio(1, 2));
  const auto u = apply_A_inverse(m, 1);
  const auto ux = differentiate(u);
  const auto uxx = differentiate(u, 2);
  const auto inner = three_halves * multiply(u, u) - half * multiply(ux, ux) - multiply(u, uxx);
  return apply_A_inverse(inner, 1);
}

std::pair<double, FourierSeries<double>> second_hamiltonians(const FourierSeries<double>& m,
                                                             SecondHamiltonian which) {
  const double two_pi = 2.0 * std::numbers::pi;
  double value = 0.0;
  if (which == SecondHamiltonian::H0) {
    value = 0.5 * two_pi * mean(multiply(multiply(m, m), m)).re;
  } else {
    const auto u = apply_A_inverse(m, 1);
    const auto ux = differentiate(u);
    value = 0.5 * two_pi * mean(multiply(u, multiply(u, u) + multiply(ux, ux))).re;
  }
  return {value, second_hamiltonian_gradient(m, which)};
}

RegularFunctional second_hamiltonian_functional(SecondHamiltonian which) {
  const std::string name = which == SecondHamiltonian::H0 ? "htilde0" : "htilde1";
  return {name,
          [which](const FourierSeries<double>& m) { return second_hamiltonians(m, which).first; },
          [which](const FourierSeries<double>& m) { return second_hamiltonian_gradient(m, which); }};
}

template <class T>
CocycleSpec<T> second_structure(SecondHamiltonian which) {
  // D = (1/2) D + D (1/2); D - D^3 adds beta = -1.
  return CocycleSpec<T>::from_alpha_beta(T(1), which == SecondHamiltonian::H0 ? T(0) : T(-1));
}

template <class T>
FourierSeries<T> apply_second_structure(const FourierSeries<T>& f, SecondHamiltonian which) {
  if (which == SecondHamiltonian::H0) return differentiate(f);
  return differentiate(f) - differentiate(f, 3);
}

#define VECTS1_INSTANTIATE(T)                                                                   \
  template OperatorMatrix<T> op_A<T>(int, int);                                                 \
  template OperatorMatrix<T> op_A_inverse<T>(int, int);                                         \
  template FourierSeries<T> apply_A(const FourierSeries<T>&, int);                              \
  template FourierSeries<T> apply_A_inverse(const FourierSeries<T>&, int);                      \
  template FourierSeries<T> X_k_field(const FourierSeries<T>&, int);                            \
  template OperatorMatrix<T> dX_k_operator(const FourierSeries<T>&, int, int);                  \
  template FourierSeries<T> second_hamiltonian_gradient(const FourierSeries<T>&, SecondHamiltonian); \
  template CocycleSpec<T> second_structure<T>(SecondHamiltonian);                               \
  template FourierSeries<T> apply_second_structure(const FourierSeries<T>&, SecondHamiltonian);

VECTS1_INSTANTIATE(double)
VECTS1_INSTANTIATE(Rational)

}  // namespace vects1
