#include "vects1/burgers_reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vects1 {

double characteristics_solution(const std::function<double(double)>& u0, double x, double t,
                                double tol, int max_iter) {
  double u = u0(x);
  for (int it = 0; it < max_iter; ++it) {
    const double next = u0(x - 3.0 * u * t);
    if (std::abs(next - u) <= tol * std::max(1.0, std::abs(next))) return next;
    u = next;
  }
  throw std::runtime_error("characteristics iteration did not converge (past breaking?)");
}

std::vector<double> characteristics_samples(const FourierSeries<double>& u0, double t, int points) {
  const auto f = [&u0](double y) { return u0.evaluate(y).real(); };
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int p = 0; p < points; ++p)
    out[p] = characteristics_solution(f, 2.0 * std::numbers::pi * p / points, t);
  return out;
}

double burgers_breaking_time(const FourierSeries<double>& u0) {
  const auto du = differentiate(u0);
  constexpr int kPoints = 8192;
  double steepest = 0.0;
  for (int p = 0; p < kPoints; ++p)
    steepest = std::max(steepest, -du.evaluate(2.0 * std::numbers::pi * p / kPoints).real());
  if (steepest <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (3.0 * steepest);
}

double characteristics_error(const FourierSeries<double>& u0, const FourierSeries<double>& u,
                             double t, int points) {
  const auto ref = characteristics_samples(u0, t, points);
  double err = 0.0;
  for (int p = 0; p < points; ++p)
    err = std::max(err, std::abs(u.evaluate(2.0 * std::numbers::pi * p / points).real() - ref[p]));
  return err;
}

}  // namespace vects1
