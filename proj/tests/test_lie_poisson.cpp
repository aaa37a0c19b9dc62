#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "vects1/lie_poisson.hpp"
#include "vects1/sobolev.hpp"

using namespace vects1;
using vects1::testing::kPi;
using CQ = Complex<Rational>;
using SQ = FourierSeries<Rational>;
using SD = FourierSeries<double>;

namespace {

// Cyclic sum for K = m0 D + D m0 + beta D^3 with constant m0 = alpha/2 and
// exponentials: <[e_a, e_b], K e_c> / 2pi = i (b - a) kappa(c) when a+b+c = 0,
// where kappa(c) = i alpha c - i beta c^3.
CQ jacobi_oracle(const Rational& alpha, const Rational& beta, int a, int b, int c) {
  if (a + b + c != 0) return CQ(Rational(0));
  auto term = [&](int p, int q, int r) {
    const CQ kappa(Rational(0), alpha * r - beta * Rational(r) * r * r);
    return CQ(Rational(0), Rational(q - p)) * kappa;
  };
  return term(a, b, c) + term(b, c, a) + term(c, a, b);
}

}  // namespace

TEST_CASE("lie bracket") {
  CHECK(lie_bracket(SQ::constant(1), SQ::sin_mode(1)).equals(SQ::cos_mode(1)));
  CHECK(lie_bracket(SQ::sin_mode(1), SQ::cos_mode(1)).equals(SQ::constant(-1)));
  CHECK(lie_bracket(SQ::cos_mode(3), SQ::cos_mode(3)).equals(SQ::zero()));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = testing::random_complex_rational(rng, 3);
    const auto v = testing::random_complex_rational(rng, 3);
    const auto w = testing::random_complex_rational(rng, 3);
    CHECK(lie_bracket(u, v).equals(-lie_bracket(v, u)));
    const auto jac = lie_bracket(u, lie_bracket(v, w)) + lie_bracket(v, lie_bracket(w, u)) +
                     lie_bracket(w, lie_bracket(u, v));
    CHECK(jac.bandwidth() == -1);
  }
}

TEST_CASE("canonical structure J(m)") {
  CHECK(op_J(SQ::constant(1), 3).apply(SQ::sin_mode(2)).equals(SQ::cos_mode(2, Rational(4))));
  CHECK(op_J(SQ::zero(), 3).is_zero());
  CHECK(op_J(SQ::cos_mode(1), 3)
            .apply(SQ::sin_mode(1))
            .equals(SQ::constant(Rational(1, 2)) + SQ::cos_mode(2, Rational(3, 2))));

  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_real_rational(rng, 3);
    const auto j = op_J(m, 6);
    CHECK(bilinear_adjoint(j).equals(CQ(Rational(-1)) * j));
    const auto u = testing::random_complex_rational(rng, 3);
    const auto v = testing::random_complex_rational(rng, 3);
    // in-band, so truncation does not enter
    CHECK(pairing(op_J(m, 9).apply(u), v) == -pairing(u, op_J(m, 9).apply(v)));
  }
}

TEST_CASE("modified structures K") {
  const auto d = op_derivative<Rational>(4);
  CHECK(op_K(CocycleSpec<Rational>{SQ::constant(Rational(1, 2)), Rational(0)}, 4).equals(d));
  CHECK(op_K(CocycleSpec<Rational>::from_alpha_beta(Rational(1), Rational(-1)), 4)
            .equals(d - compose(d, compose(d, d))));
  const auto k3 = op_K(CocycleSpec<Rational>{SQ::zero(), Rational(1)}, 4);
  CHECK(k3.apply(SQ::exponential(1)).equals(SQ::exponential(1, CQ(Rational(0), Rational(-1)))));

  const CocycleSpec<Rational> wavy{SQ::constant(1) + SQ::sin_mode(2, Rational(1, 2)), Rational(3)};
  const auto kw = op_K(wavy, 6);
  CHECK(bilinear_adjoint(kw).equals(CQ(Rational(-1)) * kw));
}

TEST_CASE("jacobi defect") {
  const auto d3 = op_K(CocycleSpec<Rational>{SQ::zero(), Rational(1)}, 6);
  CHECK(jacobi_defect(d3, 1, 2, -3).is_zero());
  CHECK_THROWS_AS(jacobi_defect(d3, 4, 4, -3), BandwidthError);

  SUBCASE("constant-coefficient oracle") {
    const Rational alpha(3, 2), beta(-2, 7);
    const auto k = op_K(CocycleSpec<Rational>::from_alpha_beta(alpha, beta), 12);
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c) {
          CHECK(jacobi_defect(k, a, b, c) == jacobi_oracle(alpha, beta, a, b, c));
          CHECK(jacobi_oracle(alpha, beta, a, b, c).is_zero());
        }
  }
  SUBCASE("non-cocycle is detected") {
    // D^2 is symmetric, not skew: sum_cyc (b - a) c^2 = 20 at (1, 2, -3)
    const auto d2 = op_derivative<Rational>(8, 2);
    CHECK(jacobi_defect(d2, 1, 2, -3) == CQ(Rational(0), Rational(-20)));
    CHECK_FALSE(verify_cocycle(d2, 3, "D^2").exact_zero);
  }
  SUBCASE("coboundaries") {
    const auto kc = op_K(CocycleSpec<Rational>{SQ::cos_mode(1), Rational(0)}, 9);
    const auto r = verify_cocycle(kc, 4, "cos");
    CHECK(r.exact_zero);
    CHECK(r.max_defect == 0.0);
    CHECK(r.triples_checked == 9 * 9 * 9);
    CHECK_THROWS_AS(verify_cocycle(kc, 5, "cos"), BandwidthError);
    const auto j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["exact_zero"] == true);
  }
}

TEST_CASE("poisson bracket and hamiltonian fields") {
  const auto fs = linear_functional(SD::sin_mode(1));
  const auto fc = linear_functional(SD::cos_mode(1));
  const SD one = SD::constant(1.0);
  const auto j1 = op_J(one, 4);
  CHECK(poisson_bracket(fs, fc, one, j1) == doctest::Approx(-2 * kPi));
  CHECK(poisson_bracket(fs, fs, one, j1) == doctest::Approx(0.0));
  CHECK(poisson_bracket(fs, fc, one, OperatorMatrix<double>(4)) == 0.0);

  const auto m = SD::cos_mode(1, 0.5) + SD::sin_mode(3, 0.25) + SD::constant(1.0);
  const auto mean_f = linear_functional(one);
  const auto field = hamiltonian_field(mean_f, canonical_structure(8), m);
  CHECK(field.max_abs_diff(differentiate(m)) < 1e-14);

  const RegularFunctional zero_grad{"zero", [](const SD&) { return 0.0; },
                                    [](const SD&) { return SD::zero(); }};
  CHECK(hamiltonian_field(zero_grad, canonical_structure(8), m).max_abs() == 0.0);

  SUBCASE("h_k field equals X_k") {
    for (int k = 0; k <= 3; ++k)
      CHECK(hamiltonian_field(h_k_functional(k), canonical_structure(12), m).max_abs_diff(X_k_field(m, k)) <
            1e-13);
  }
  SUBCASE("linear functionals close under the bracket") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = testing::random_real(rng, 3);
      const auto v = testing::random_real(rng, 3);
      const auto mm = testing::random_real(rng, 3);
      const double lhs = poisson_bracket(linear_functional(u), linear_functional(v), mm, op_J(mm, 12));
      const double rhs = linear_functional(lie_bracket(u, v)).value(mm);
      CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("gradient audits") {
  const auto dirs = default_directions();
  CHECK(dirs.size() == 5);
  const auto m = SD::constant(0.7) + SD::cos_mode(1, 0.3) + SD::sin_mode(2, -0.2);

  const auto lin = linear_functional(SD::cos_mode(2));
  CHECK(gradient_symmetry_check(lin, m, dirs) == 0.0);
  CHECK(gradient_audit(lin, m, dirs) < 1e-9);

  CHECK(gradient_symmetry_check(h_k_functional(1), m, dirs) < 1e-6);

  // m -> m_x is not the gradient of anything; the asymmetry for
  // (sin x, cos x) is 2 <cos x, cos x> = 2 pi
  const RegularFunctional bogus{"bogus", [](const SD& x) { return l2_pair(x, x).real(); },
                                [](const SD& x) { return differentiate(x); }};
  const double defect = gradient_symmetry_check(bogus, m, {SD::sin_mode(1), SD::cos_mode(1)});
  CHECK(defect == doctest::Approx(2 * kPi).epsilon(1e-6));
}
