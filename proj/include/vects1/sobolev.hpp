#ifndef VECTS1_SOBOLEV_HPP
#define VECTS1_SOBOLEV_HPP

// H^k machinery: A_k = 1 - D^2 + ... + (-1)^k D^{2k}, with Fourier symbol
// f_k(j) = 1 + j^2 + ... + j^{2k}; the energies h_k(m) = 1/2 int m A_k^{-1} m;
// the Lie-Poisson fields X_k(m) = J(m) A_k^{-1} m and their linearizations;
// and the second Hamiltonians that make X_0 and X_1 bi-Hamiltonian.

#include <cstdint>
#include <utility>

#include "vects1/fourier.hpp"
#include "vects1/lie_poisson.hpp"
#include "vects1/operator.hpp"

namespace vects1 {

/// f_k(r) = sum_{i=0}^{k} r^{2i}. Defined for every integer r, including
/// r = +-1 where the closed form (r^{2k+2}-1)/(r^2-1) is 0/0.
/// Throws std::overflow_error when the value does not fit in 64 bits.
std::int64_t sobolev_symbol(int k, std::int64_t r);

/// (r^{2k+2} - 1) / (r^2 - 1) evaluated exactly; only for |r| != 1.
Rational sobolev_symbol_closed_form(int k, std::int64_t r);

template <class T>
T sobolev_symbol_as(int k, std::int64_t r) {
  return ScalarTraits<T>::from_int(sobolev_symbol(k, r));
}

template <class T>
OperatorMatrix<T> op_A(int k, int max_freq);
template <class T>
OperatorMatrix<T> op_A_inverse(int k, int max_freq);

template <class T>
FourierSeries<T> apply_A(const FourierSeries<T>& f, int k);
template <class T>
FourierSeries<T> apply_A_inverse(const FourierSeries<T>& f, int k);

/// <u, v>_k by both routes: sum_i int (D^i u)(D^i v) dx and int A_k(u) v dx.
struct SobolevInner {
  double by_derivatives;
  double by_operator;
};
SobolevInner sobolev_inner_both(const FourierSeries<double>& u, const FourierSeries<double>& v,
                                int k);
/// The common value of the two routes (the operator route).
double sobolev_inner(const FourierSeries<double>& u, const FourierSeries<double>& v, int k);

/// h_k(m) and its gradient A_k^{-1} m.
std::pair<double, FourierSeries<double>> h_k_eval(const FourierSeries<double>& m, int k);
RegularFunctional h_k_functional(int k);

/// X_k(m) = 2 m u_x + u m_x with u = A_k^{-1} m, at full bandwidth.
template <class T>
FourierSeries<T> X_k_field(const FourierSeries<T>& m, int k);

/// dX_k(m) = 2 u_x I + u D + 2 m D A_k^{-1} + m_x A_k^{-1}.
template <class T>
OperatorMatrix<T> dX_k_operator(const FourierSeries<T>& m, int k, int max_freq);

enum class SecondHamiltonian { H0 = 0, H1 = 1 };

/// Gradient of the second Hamiltonian:
///   H0: (3/2) m^2
///   H1: A_1^{-1}((3/2) u^2 - (1/2) u_x^2 - u u_xx), u = A_1^{-1} m.
template <class T>
FourierSeries<T> second_hamiltonian_gradient(const FourierSeries<T>& m, SecondHamiltonian which);

/// Value and gradient of h~0(m) = 1/2 int m^3 dx or
/// h~1(m) = 1/2 int (u^3 + u u_x^2) dx.
std::pair<double, FourierSeries<double>> second_hamiltonians(const FourierSeries<double>& m,
                                                             SecondHamiltonian which);
RegularFunctional second_hamiltonian_functional(SecondHamiltonian which);

/// The companion structure operator: D for H0, D - D^3 for H1.
template <class T>
CocycleSpec<T> second_structure(SecondHamiltonian which);

/// Applies D (H0) or D - D^3 (H1) to a series without truncation.
template <class T>
FourierSeries<T> apply_second_structure(const FourierSeries<T>& f, SecondHamiltonian which);

}  // namespace vects1

#endif
