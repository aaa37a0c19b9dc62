#include "doctest.h"

#include <random>
#include <sstream>

#include "test_support.hpp"
#include "vects1/burgers_reference.hpp"
#include "vects1/flows.hpp"
#include "vects1/sobolev.hpp"

using namespace vects1;
using vects1::testing::kPi;
using SQ = FourierSeries<Rational>;
using SD = FourierSeries<double>;

TEST_CASE("flow right-hand sides") {
  CHECK(flow_rhs(SQ::constant(2), 1).bandwidth() == -1);
  CHECK(flow_rhs(SQ::sin_mode(1), 0).equals(SQ::sin_mode(2, Rational(-3, 2))));
  CHECK(flow_rhs(SQ::cos_mode(1, Rational(2)), 1).equals(SQ::sin_mode(2, Rational(3))));

  CHECK(ch_u_form_rhs(SQ::constant(5)).bandwidth() == -1);
  CHECK(apply_A(ch_u_form_rhs(SQ::cos_mode(1)), 1).equals(flow_rhs(SQ::cos_mode(1, Rational(2)), 1)));

  SUBCASE("u = sin x by direct pointwise evaluation") {
    // -sin cos - D A^{-1}(sin^2 + cos^2 / 2) with sin^2 + cos^2/2 = 3/4 - cos 2x / 4,
    // A^{-1} cos 2x = cos 2x / 5, so the second term is -(1/10) sin 2x.
    const auto r = ch_u_form_rhs(SD::sin_mode(1));
    const double err = testing::max_pointwise_error(
        r, [](double x) { return std::complex<double>(-0.5 * std::sin(2 * x) - 0.1 * std::sin(2 * x)); });
    CHECK(err < 1e-12);
  }
  SUBCASE("m-form and u-form agree on random inputs (exact)") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = testing::random_real_rational(rng, 8);
      CHECK(apply_A(ch_u_form_rhs(u), 1).equals(flow_rhs(apply_A(u, 1), 1)));
    }
  }
}

TEST_CASE("evolve validation") {
  const auto m = SD::cos_mode(1, 2.0);
  CHECK_THROWS(evolve(m, 1, 1.0, -1.0, 64));
  CHECK_THROWS(evolve(m, 1, 1.0, 0.0, 64));
  CHECK_THROWS(evolve(m, 1, -1.0, 0.1, 64));
  CHECK_THROWS(evolve(m, 1, 1.0, 0.1, 48));
  CHECK_THROWS(evolve(SD::cos_mode(20), 1, 1.0, 0.1, 64));
  CHECK_THROWS(evolve(SD::exponential(1), 1, 1.0, 0.1, 64));
  CHECK(dealiased_max_freq(128) == 42);
}

TEST_CASE("constant data are fixed points") {
  for (int k = 0; k <= 3; ++k) {
    const auto tr = evolve(SD::constant(0.3), k, 1.0, 0.1, 16);
    CHECK(tr.times.front() == 0.0);
    CHECK(tr.times.back() == doctest::Approx(1.0));
    CHECK(tr.states.size() == tr.times.size());
    for (const auto& s : tr.states) CHECK(s.equals(SD::constant(0.3)));
    for (const auto& inv : tr.invariants) {
      CHECK(inv.h == tr.invariants.front().h);
      CHECK(inv.mean == tr.invariants.front().mean);
    }
    CHECK(tr.drift_h() == 0.0);
    CHECK(tr.halt_reason == "completed");
  }
}

TEST_CASE("Camassa-Holm conservation") {
  const auto m0 = SD::cos_mode(1, 2.0);
  const auto tr = evolve(m0, 1, 1.0, 1e-3, 128);
  CHECK(tr.states.front().equals(m0));
  for (std::size_t i = 1; i < tr.times.size(); ++i) CHECK(tr.times[i] > tr.times[i - 1]);
  CHECK(tr.invariants.front().h == doctest::Approx(kPi));
  CHECK(tr.drift_h() <= 1e-6);
  CHECK(tr.drift_h_second() <= 1e-6);
  CHECK(tr.drift_mean() <= 1e-10);
  CHECK_FALSE(tr.broke);
}

TEST_CASE("Burgers against characteristics") {
  const auto u0 = SD::sin_mode(1, 0.1);
  CHECK(burgers_breaking_time(u0) == doctest::Approx(10.0 / 3.0).epsilon(1e-6));
  CHECK(burgers_breaking_time(SD::constant(1.0)) == std::numeric_limits<double>::infinity());

  // fixed point check of the reference itself
  const auto f = [](double x) { return 0.1 * std::sin(x); };
  const double u = characteristics_solution(f, 1.2, 1.0);
  CHECK(std::abs(u - f(1.2 - 3 * u)) < 1e-15);

  const auto tr = evolve(u0, 0, 1.0, 1e-3, 128);
  CHECK(characteristics_error(u0, tr.final_state(), 1.0, 128) <= 1e-6);
  CHECK(tr.drift_h() <= 1e-6);
  CHECK(tr.drift_h_second() <= 1e-6);
}

TEST_CASE("wave breaking halts the run") {
  FlowOptions opt;
  opt.breaking_threshold = 2.0;
  const auto tr = evolve(SD::sin_mode(1, 1.0), 0, 2.0, 1e-3, 64, opt);
  CHECK(tr.broke);
  CHECK(tr.halt_reason == "breaking");
  CHECK(tr.times.back() < 1.0);
  CHECK(tr.invariants.back().max_abs_ux > 2.0);
}

TEST_CASE("fourth-order time convergence") {
  const auto m0 = SD::cos_mode(1, 2.0) + SD::sin_mode(2, 0.3);
  FlowOptions opt;
  opt.keep_states = false;
  const double T = 0.5, dt = 0.05;
  const auto ref = evolve(m0, 1, T, dt / 8, 64, opt).final_state();
  const double e1 = evolve(m0, 1, T, dt, 64, opt).final_state().max_abs_diff(ref);
  const double e2 = evolve(m0, 1, T, dt / 2, 64, opt).final_state().max_abs_diff(ref);
  CHECK(e1 / e2 >= 8 * 0.8);
}

TEST_CASE("trace export") {
  FlowOptions opt;
  opt.record_every = 5;
  const auto tr = evolve(SD::cos_mode(1, 2.0), 1, 0.1, 0.01, 16, opt);
  CHECK(tr.times.size() == 3);
  std::ostringstream os;
  write_trace_csv(os, tr, true);
  const std::string s = os.str();
  CHECK(s.rfind("t,h,h_second,mean,max_abs_ux,", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);

  const auto man = manifest_json(tr, 0.1, "2cos");
  CHECK(man["schema"] == 1);
  CHECK(man["halt_reason"] == "completed");
  CHECK(man["k"] == 1);
}
