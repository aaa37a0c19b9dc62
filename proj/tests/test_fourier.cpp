#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "vects1/fourier.hpp"

using namespace vects1;
using vects1::testing::kPi;

using SD = FourierSeries<double>;
using SQ = FourierSeries<Rational>;

TEST_CASE("series construction and invariants") {
  CHECK_THROWS_AS(SD(2, std::vector<Complex<double>>(3)), std::invalid_argument);
  CHECK_THROWS_AS(SD(-1), std::invalid_argument);
  // real_flag is only accepted for conjugate-symmetric coefficients
  CHECK_THROWS_AS(SD(1, {Complex<double>(1.0), Complex<double>(0.0), Complex<double>(2.0)}, true),
                  std::invalid_argument);

  const auto c = SQ::cos_mode(3, Rational(2));
  CHECK(c.max_freq() == 3);
  CHECK(c.real_flag());
  CHECK(c.is_real_symmetric());
  CHECK(c[3] == Complex<Rational>(Rational(1)));
  CHECK(c[-3] == Complex<Rational>(Rational(1)));
  CHECK(c[7].is_zero());

  const auto s = SD::sin_mode(1);
  CHECK(std::abs(s.evaluate(kPi / 2) - 1.0) < 1e-15);
  CHECK(SD::exponential(2).evaluate(0.3) == std::polar(1.0, 0.6));
  CHECK_FALSE(SD::exponential(2).real_flag());
  CHECK(SQ::zero(4).bandwidth() == -1);
  CHECK((SQ::sin_mode(2) + SQ::constant(1)).bandwidth() == 2);
}

TEST_CASE("multiply") {
  CHECK(multiply(SQ::constant(1), SQ::constant(1)).equals(SQ::constant(1)));

  // cos^2 x = 1/2 + 1/2 cos 2x
  const auto sq = multiply(SQ::cos_mode(1), SQ::cos_mode(1));
  CHECK(sq.equals(SQ::constant(Rational(1, 2)) + SQ::cos_mode(2, Rational(1, 2))));
  CHECK(sq.real_flag());

  CHECK(multiply(SQ::exponential(1), SQ::exponential(2)).equals(SQ::exponential(3)));

  // truncation drops the e^{3ix} term
  CHECK(multiply(SQ::exponential(1), SQ::exponential(2), 2).equals(SQ::zero()));

  SUBCASE("brute-force pointwise oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = testing::random_complex(rng, 4);
      const auto g = testing::random_complex(rng, 3);
      const auto fg = multiply(f, g);
      CHECK(testing::max_pointwise_error(fg, [&](double x) { return f.evaluate(x) * g.evaluate(x); }) <
            1e-12);
    }
  }
}

TEST_CASE("differentiate") {
  CHECK(differentiate(SQ::sin_mode(1)).equals(SQ::cos_mode(1)));
  CHECK(differentiate(SQ::exponential(2), 3)
            .equals(SQ::exponential(2, Complex<Rational>(Rational(0), Rational(-8)))));
  CHECK(differentiate(SQ::constant(5)).equals(SQ::zero()));
  CHECK(differentiate(SQ::cos_mode(2)).real_flag());
  CHECK_THROWS(differentiate(SQ::constant(1), -1));
}

TEST_CASE("l2 pairing") {
  CHECK(std::abs(l2_pair(SD::exponential(1), SD::exponential(-1)) - 2 * kPi) < 1e-14);
  CHECK(std::abs(l2_pair(SD::exponential(1), SD::exponential(1))) == 0.0);
  CHECK(std::abs(l2_pair(SD::cos_mode(1), SD::cos_mode(1)) - kPi) < 1e-14);
  CHECK(pairing(SQ::cos_mode(1), SQ::cos_mode(1)) == Complex<Rational>(Rational(1, 2)));

  std::mt19937 rng(5);
  SUBCASE("quadrature oracle") {
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = testing::random_complex(rng, 5);
      const auto g = testing::random_complex(rng, 6);
      const auto q = testing::quadrature([&](double x) { return f.evaluate(x) * g.evaluate(x); });
      CHECK(std::abs(l2_pair(f, g) - q) < 1e-11);
    }
  }
  SUBCASE("symmetry, bilinearity and integration by parts (exact)") {
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = testing::random_complex_rational(rng, 4);
      const auto g = testing::random_complex_rational(rng, 5);
      const auto h = testing::random_complex_rational(rng, 3);
      const Complex<Rational> s(Rational(2, 3), Rational(-1, 5));
      CHECK(pairing(f, g) == pairing(g, f));
      CHECK(pairing(s * f + h, g) == s * pairing(f, g) + pairing(h, g));
      CHECK(pairing(differentiate(f), g) == -pairing(f, differentiate(g)));
      // Leibniz
      CHECK(differentiate(multiply(f, g))
                .equals(multiply(differentiate(f), g) + multiply(f, differentiate(g))));
    }
  }
}

TEST_CASE("grid transforms") {
  const auto c2 = SD::cos_mode(2);
  const auto samples = grid_transform(c2, 8);
  for (int p = 0; p < 8; ++p) CHECK(std::abs(samples[p] - std::cos(2 * (2 * kPi * p / 8))) < 1e-14);
  CHECK(inverse_grid_transform(samples, 2).max_abs_diff(c2) < 1e-12);

  for (const auto& z : grid_transform(SD::zero(3), 16)) CHECK(z == std::complex<double>(0.0));

  const auto f = SD::exponential(1) + SD::exponential(3);
  const auto back = inverse_grid_transform(grid_transform(f, 16), 3);
  CHECK(back.max_abs_diff(f) < 1e-12);
  const auto direct = grid_transform(f, 16);
  for (int p = 0; p < 16; ++p) CHECK(std::abs(direct[p] - f.evaluate(2 * kPi * p / 16)) < 1e-13);

  CHECK_THROWS_AS(inverse_grid_transform(std::vector<std::complex<double>>(6), 3), ResolutionError);

  SUBCASE("random round trips") {
    std::mt19937 rng(3);
    GridTransform grid(32);
    for (int trial = 0; trial < 10; ++trial) {
      const auto r = testing::random_real(rng, 15);
      CHECK(grid.from_grid_real(grid.to_grid_real(r), 15).max_abs_diff(r) < 1e-13);
    }
  }
}

TEST_CASE("json serialization") {
  const auto f = SD::cos_mode(1) + SD::constant(0.5);
  const auto j = to_json(f);
  CHECK(j["N"] == 1);
  CHECK(j["coeffs"].size() == 3);
  CHECK(j["coeffs"][1][0] == 0.5);
  CHECK(series_from_json(j).equals(f));
  CHECK_THROWS(series_from_json(nlohmann::json{{"N", 2}, {"coeffs", nlohmann::json::array()}}));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}
