#include "doctest.h"

#include <limits>
#include <random>

#include "test_support.hpp"
#include "vects1/sobolev.hpp"

using namespace vects1;
using vects1::testing::kPi;
using CQ = Complex<Rational>;
using SQ = FourierSeries<Rational>;
using SD = FourierSeries<double>;

TEST_CASE("sobolev symbol") {
  for (int r = -5; r <= 5; ++r) CHECK(sobolev_symbol(0, r) == 1);
  CHECK(sobolev_symbol(1, 2) == 5);
  CHECK(sobolev_symbol_closed_form(1, 2) == Rational(5));
  for (int k = 0; k <= 6; ++k) {
    CHECK(sobolev_symbol(k, 1) == k + 1);
    CHECK(sobolev_symbol(k, -1) == k + 1);
    for (int r : {0, 2, -3, 7}) CHECK(Rational(sobolev_symbol(k, r)) == sobolev_symbol_closed_form(k, r));
  }
  CHECK_THROWS(sobolev_symbol_closed_form(2, 1));
  CHECK_THROWS_AS(sobolev_symbol(20, 1000), std::overflow_error);
  CHECK_THROWS(sobolev_symbol(-1, 2));
}

TEST_CASE("A_k operators") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(compose(op_A<Rational>(k, 5), op_A_inverse<Rational>(k, 5)).equals(OperatorMatrix<Rational>::identity(5)));
    // A_k = sum_i (-1)^i D^{2i}
    OperatorMatrix<Rational> acc(5);
    auto power = OperatorMatrix<Rational>::identity(5);
    const auto d2 = compose(op_derivative<Rational>(5), op_derivative<Rational>(5));
    for (int i = 0; i <= k; ++i) {
      acc += CQ(Rational(i % 2 == 0 ? 1 : -1)) * power;
      power = compose(power, d2);
    }
    CHECK(acc.equals(op_A<Rational>(k, 5)));
  }
  const auto m = SQ::cos_mode(2, Rational(3)) + SQ::constant(1);
  CHECK(apply_A_inverse(apply_A(m, 2), 2).equals(m));
  CHECK(apply_A(SQ::cos_mode(1), 1).equals(SQ::cos_mode(1, Rational(2))));
}

TEST_CASE("sobolev inner product") {
  for (int k = 0; k <= 4; ++k) {
    CHECK(sobolev_inner(SD::constant(1.0), SD::constant(1.0), k) == doctest::Approx(2 * kPi));
    CHECK(std::abs(sobolev_inner(SD::sin_mode(2), SD::cos_mode(2), k)) < 1e-15);
  }
  CHECK(sobolev_inner(SD::cos_mode(1), SD::cos_mode(1), 1) == doctest::Approx(2 * kPi));

  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = testing::random_real(rng, 6);
    const auto v = testing::random_real(rng, 6);
    for (int k = 0; k <= 3; ++k) {
      const auto both = sobolev_inner_both(u, v, k);
      CHECK(std::abs(both.by_derivatives - both.by_operator) <= 1e-12 * (1.0 + std::abs(both.by_operator)));
    }
  }
}

TEST_CASE("energies h_k") {
  auto [v0, g0] = h_k_eval(SD::zero(), 2);
  CHECK(v0 == 0.0);
  CHECK(g0.max_abs() == 0.0);

  // 1/2 int cos x (cos x / 2) dx = pi / 4
  auto [v1, g1] = h_k_eval(SD::cos_mode(1), 1);
  CHECK(v1 == doctest::Approx(kPi / 4));
  CHECK(h_k_eval(SD::cos_mode(1, 2.0), 1).first == doctest::Approx(kPi));
  CHECK(g1.max_abs_diff(SD::cos_mode(1, 0.5)) < 1e-15);

  for (int k = 0; k <= 4; ++k) {
    auto [v, g] = h_k_eval(SD::constant(1.0), k);
    CHECK(v == doctest::Approx(kPi));
    CHECK(g.max_abs_diff(SD::constant(1.0)) == 0.0);
  }
}

TEST_CASE("fields X_k") {
  CHECK(X_k_field(SQ::constant(3), 2).bandwidth() == -1);
  CHECK(X_k_field(SQ::sin_mode(1), 0).equals(SQ::sin_mode(2, Rational(3, 2))));
  CHECK(X_k_field(SQ::cos_mode(1, Rational(2)), 1).equals(SQ::sin_mode(2, Rational(-3))));

  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_real_rational(rng, 4);
    for (int k = 0; k <= 4; ++k) CHECK(pairing(SQ::constant(1), X_k_field(m, k)).is_zero());
  }
}

TEST_CASE("linearization dX_k") {
  CHECK(dX_k_operator(SQ::constant(1), 0, 3).equals(CQ(Rational(3)) * op_derivative<Rational>(3)));
  const auto e2 = dX_k_operator(SQ::constant(1), 1, 3).apply(SQ::exponential(2));
  CHECK(e2.equals(SQ::exponential(2, CQ(Rational(0), Rational(14, 5)))));
  CHECK(dX_k_operator(SQ::zero(), 2, 3).is_zero());

  SUBCASE("exact linearization in rational mode") {
    // X_k is quadratic, so the central difference is exact at any step
    std::mt19937 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = testing::random_real_rational(rng, 3);
      const auto dir = testing::random_real_rational(rng, 3);
      for (int k = 0; k <= 3; ++k) {
        const auto fd = (X_k_field(m + dir, k) - X_k_field(m - dir, k)) * CQ(Rational(1, 2));
        CHECK(dX_k_operator(m, k, 6).apply(dir).equals(fd));
      }
    }
  }
  SUBCASE("finite differences in float mode") {
    std::mt19937 rng(15);
    const double eps = 1e-5;
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = testing::random_real(rng, 3);
      const auto dir = testing::random_real(rng, 3);
      for (int k = 0; k <= 3; ++k) {
        const auto fd = (X_k_field(m + eps * dir, k) - X_k_field(m - eps * dir, k)) * Complex<double>(0.5 / eps);
        CHECK(dX_k_operator(m, k, 6).apply(dir).max_abs_diff(fd) < 1e-6);
      }
    }
  }
}

TEST_CASE("second hamiltonians") {
  auto [z, gz] = second_hamiltonians(SD::zero(), SecondHamiltonian::H1);
  CHECK(z == 0.0);
  CHECK(gz.max_abs() == 0.0);

  CHECK(second_hamiltonians(SD::constant(1.0) + SD::sin_mode(1), SecondHamiltonian::H0).first ==
        doctest::Approx(2.5 * kPi));
  CHECK(std::abs(second_hamiltonians(SD::cos_mode(1, 2.0), SecondHamiltonian::H1).first) < 1e-14);

  // h~1 by quadrature of 1/2 (u^3 + u u_x^2)
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = testing::random_real(rng, 5);
    const auto u = apply_A_inverse(m, 1);
    const auto ux = differentiate(u);
    const auto q = testing::quadrature([&](double x) {
      const double uu = u.evaluate(x).real(), vv = ux.evaluate(x).real();
      return std::complex<double>(0.5 * (uu * uu * uu + uu * vv * vv));
    });
    CHECK(second_hamiltonians(m, SecondHamiltonian::H1).first == doctest::Approx(q.real()).epsilon(1e-12));
  }

  CHECK(apply_second_structure(SQ::sin_mode(1), SecondHamiltonian::H0).equals(SQ::cos_mode(1)));
  CHECK(apply_second_structure(SQ::sin_mode(1), SecondHamiltonian::H1).equals(SQ::cos_mode(1, Rational(2))));
  CHECK(op_K(second_structure<Rational>(SecondHamiltonian::H1), 3)
            .equals(op_derivative<Rational>(3) - op_derivative<Rational>(3, 3)));
}

TEST_CASE("bi-hamiltonian identities (exact)") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> bw(0, 8);
    const auto m = testing::random_real_rational(rng, bw(rng));
    CHECK(X_k_field(m, 0).equals(
        apply_second_structure(second_hamiltonian_gradient(m, SecondHamiltonian::H0), SecondHamiltonian::H0)));
    CHECK(X_k_field(m, 1).equals(
        apply_second_structure(second_hamiltonian_gradient(m, SecondHamiltonian::H1), SecondHamiltonian::H1)));
  }
}

TEST_CASE("gradient audits for the energies") {
  const auto dirs = default_directions();
  std::mt19937 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = SD::constant(1.0) + testing::random_real(rng, 3, 0.5);
    for (int k = 0; k <= 3; ++k) {
      CHECK(gradient_audit(h_k_functional(k), m, dirs) < 1e-6);
      CHECK(gradient_symmetry_check(h_k_functional(k), m, dirs) < 1e-6);
    }
    for (auto which : {SecondHamiltonian::H0, SecondHamiltonian::H1}) {
      CHECK(gradient_audit(second_hamiltonian_functional(which), m, dirs) < 1e-6);
      CHECK(gradient_symmetry_check(second_hamiltonian_functional(which), m, dirs) < 1e-6);
    }
  }
}
