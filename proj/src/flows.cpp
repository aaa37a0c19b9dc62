#include "vects1/flows.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>

#include "vects1/sobolev.hpp"

namespace vects1 {

template <class T>
FourierSeries<T> flow_rhs(const FourierSeries<T>& m, int k) {
  return -X_k_field(m, k);
}

template <class T>
FourierSeries<T> ch_u_form_rhs(const FourierSeries<T>& u) {
  const Complex<T> half(ScalarTraits<T>::from_ratio(1, 2));
  const auto ux = differentiate(u);
  const auto source = multiply(u, u) + half * multiply(ux, ux);
  return -(multiply(u, ux) + differentiate(apply_A_inverse(source, 1)));
}

int dealiased_max_freq(int grid_points) { return (grid_points - 1) / 3; }

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

bool all_finite(const FourierSeries<double>& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Complex<double>& z) {
    return std::isfinite(z.re) && std::isfinite(z.im);
  });
}

/// Pseudospectral evaluation of -X_k(m) restricted to |j| <= kept.
class SpectralRhs {
 public:
  SpectralRhs(int k, int grid_points, int kept) : k_(k), kept_(kept), grid_(grid_points) {}

  FourierSeries<double> operator()(const FourierSeries<double>& m) const {
    const auto u = apply_A_inverse(m, k_);
    const auto m_s = grid_.to_grid_real(m);
    const auto mx_s = grid_.to_grid_real(differentiate(m));
    const auto u_s = grid_.to_grid_real(u);
    const auto ux_s = grid_.to_grid_real(differentiate(u));
    std::vector<double> out(m_s.size());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = -(2.0 * m_s[p] * ux_s[p] + u_s[p] * mx_s[p]);
    return grid_.from_grid_real(out, kept_);
  }

  double max_abs_ux(const FourierSeries<double>& m) const {
    const auto ux_s = grid_.to_grid_real(differentiate(apply_A_inverse(m, k_)));
    double mx = 0.0;
    for (double v : ux_s) mx = std::max(mx, std::abs(v));
    return mx;
  }

 private:
  int k_;
  int kept_;
  GridTransform grid_;
};

InvariantRecord measure(const FourierSeries<double>& m, int k, const SpectralRhs& rhs) {
  InvariantRecord r;
  r.h = h_k_eval(m, k).first;
  if (k == 0 || k == 1)
    r.h_second = second_hamiltonians(m, k == 0 ? SecondHamiltonian::H0 : SecondHamiltonian::H1).first;
  r.mean = kTwoPi * m[0].re;
  r.max_abs_ux = rhs.max_abs_ux(m);
  return r;
}

/// int |integrand| dx by the trapezoid rule on a fine periodic grid.
template <class F>
double abs_quadrature(F&& integrand, int points = 4096) {
  double sum = 0.0;
  for (int p = 0; p < points; ++p) sum += std::abs(integrand(kTwoPi * p / points));
  return sum * kTwoPi / points;
}

double drift(const std::vector<InvariantRecord>& rows, double scale,
             const std::function<double(const InvariantRecord&)>& get) {
  if (rows.empty()) return 0.0;
  const double v0 = get(rows.front());
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(get(r) - v0));
  if (worst == 0.0) return 0.0;
  return worst / std::max({std::abs(v0), scale, 1e-300});
}

}  // namespace

double FlowTrace::drift_h() const {
  return drift(invariants, 0.0, [](const InvariantRecord& r) { return r.h; });
}

double FlowTrace::drift_mean() const {
  return drift(invariants, mean_scale, [](const InvariantRecord& r) { return r.mean; });
}

double FlowTrace::drift_h_second() const {
  if (invariants.empty() || !invariants.front().h_second) return 0.0;
  return drift(invariants, h_second_scale,
               [](const InvariantRecord& r) { return r.h_second.value_or(0.0); });
}

InvariantRecord measure_invariants(const FourierSeries<double>& m, int k, int grid_points) {
  return measure(m, k, SpectralRhs(k, grid_points, dealiased_max_freq(grid_points)));
}

FlowTrace evolve(const FourierSeries<double>& m0, int k, double T, double dt, int grid_points,
                 const FlowOptions& options) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) throw std::invalid_argument("T must be nonnegative");
  if (!is_power_of_two(grid_points) || grid_points < 4)
    throw std::invalid_argument("grid_points must be a power of two >= 4");
  if (grid_points < 4 * std::max(m0.bandwidth(), 0))
    throw std::invalid_argument("grid_points must be at least 4 * bandwidth(m0)");
  if (options.record_every < 1) throw std::invalid_argument("record_every must be >= 1");
  if (!m0.is_real_symmetric(1e-13)) throw std::invalid_argument("initial datum must be real");

  const int kept = dealiased_max_freq(grid_points);
  const SpectralRhs rhs(k, grid_points, kept);

  FlowTrace trace;
  trace.k = k;
  trace.grid_points = grid_points;
  trace.kept_modes = kept;
  const long steps = T == 0.0 ? 0 : static_cast<long>(std::ceil(T / dt - 1e-9));
  trace.dt = steps > 0 ? T / static_cast<double>(steps) : dt;
  const double h = trace.dt;

  auto m = m0.resized(kept).with_real_flag(true);
  trace.mean_scale = abs_quadrature([&](double x) { return m.evaluate(x).real(); });
  if (k == 0) {
    trace.h_second_scale =
        0.5 * abs_quadrature([&](double x) { return std::pow(m.evaluate(x).real(), 3); });
  } else if (k == 1) {
    const auto u = apply_A_inverse(m, 1);
    const auto ux = differentiate(u);
    trace.h_second_scale = 0.5 * abs_quadrature([&](double x) {
      const double uv = u.evaluate(x).real(), uxv = ux.evaluate(x).real();
      return std::abs(uv) * (uv * uv + uxv * uxv);
    });
  }

  auto record = [&](double t, const InvariantRecord& inv) {
    trace.times.push_back(t);
    // Without keep_states only the initial and latest states are retained.
    if (options.keep_states || trace.states.size() < 2) trace.states.push_back(m);
    else trace.states.back() = m;
    trace.invariants.push_back(inv);
  };

  record(0.0, measure(m, k, rhs));
  trace.halt_reason = "completed";

  const Complex<double> half_h(0.5 * h), full_h(h), sixth_h(h / 6.0), two(2.0);
  for (long step = 1; step <= steps; ++step) {
    const auto k1 = rhs(m);
    const auto k2 = rhs(m + half_h * k1);
    const auto k3 = rhs(m + half_h * k2);
    const auto k4 = rhs(m + full_h * k3);
    m = m + sixth_h * (k1 + two * k2 + two * k3 + k4);
    if (!all_finite(m))
      throw InstabilityError("non-finite coefficient at t = " + std::to_string(step * h));

    const double t = static_cast<double>(step) * h;
    const double slope = rhs.max_abs_ux(m);
    const bool breaking = slope > options.breaking_threshold;
    if (breaking || step == steps || step % options.record_every == 0) {
      record(t, measure(m, k, rhs));
    }
    if (breaking) {
      trace.broke = true;
      trace.halt_reason = "breaking";
      break;
    }
  }
  return trace;
}

void write_trace_csv(std::ostream& os, const FlowTrace& trace, bool with_coeffs) {
  os << "t,h,h_second,mean,max_abs_ux";
  const int n = trace.kept_modes;
  if (with_coeffs) {
    for (int j = -n; j <= n; ++j) os << ",re_" << j << ",im_" << j;
  }
  os << '\n';
  const bool states_per_row = trace.states.size() == trace.times.size();
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    const auto& r = trace.invariants[i];
    os << ScalarTraits<double>::str(trace.times[i]) << ',' << ScalarTraits<double>::str(r.h) << ','
       << (r.h_second ? ScalarTraits<double>::str(*r.h_second) : std::string()) << ','
       << ScalarTraits<double>::str(r.mean) << ',' << ScalarTraits<double>::str(r.max_abs_ux);
    if (with_coeffs) {
      const auto& s = states_per_row ? trace.states[i] : trace.states.back();
      for (int j = -n; j <= n; ++j)
        os << ',' << ScalarTraits<double>::str(s[j].re) << ',' << ScalarTraits<double>::str(s[j].im);
    }
    os << '\n';
  }
}

nlohmann::json manifest_json(const FlowTrace& trace, double T, const std::string& initial_datum) {
  nlohmann::json j = {
      {"schema", 1},
      {"k", trace.k},
      {"T", T},
      {"dt", trace.dt},
      {"grid_points", trace.grid_points},
      {"kept_modes", trace.kept_modes},
      {"initial_datum", initial_datum},
      {"steps_recorded", trace.times.size()},
      {"final_time", trace.times.empty() ? 0.0 : trace.times.back()},
      {"halt_reason", trace.halt_reason},
      {"broke", trace.broke},
      {"drift", {{"h", trace.drift_h()}, {"mean", trace.drift_mean()}}},
      {"scales", {{"mean", trace.mean_scale}, {"h_second", trace.h_second_scale}}},
  };
  if (trace.k <= 1) j["drift"]["h_second"] = trace.drift_h_second();
  return j;
}

#define VECTS1_INSTANTIATE(T)                                  \
  template FourierSeries<T> flow_rhs(const FourierSeries<T>&, int); \
  template FourierSeries<T> ch_u_form_rhs(const FourierSeries<T>&);

VECTS1_INSTANTIATE(double)
VECTS1_INSTANTIATE(Rational)

}  // namespace vects1
