#ifndef VECTS1_BURGERS_REFERENCE_HPP
#define VECTS1_BURGERS_REFERENCE_HPP

// Reference solution of u_t + 3 u u_x = 0 before breaking, by the method of
// characteristics: u(x, t) = u0(x - 3 u t), solved at each point by
// fixed-point iteration. Independent of the spectral integrator.

#include <functional>
#include <vector>

#include "vects1/fourier.hpp"

namespace vects1 {

/// Fixed-point solve of u = u0(x - 3 u t). Converges while 3 t max|u0'| < 1.
double characteristics_solution(const std::function<double(double)>& u0, double x, double t,
                                double tol = 1e-15, int max_iter = 10000);

/// Samples at x_p = 2 pi p / P for the trig-polynomial datum u0.
std::vector<double> characteristics_samples(const FourierSeries<double>& u0, double t, int points);

/// 1 / (3 max(-u0')) estimated on a fine grid; +inf when u0' >= 0 everywhere.
double burgers_breaking_time(const FourierSeries<double>& u0);

/// sup_p |u(x_p, t) - samples of u|, comparing a spectral state to the reference.
double characteristics_error(const FourierSeries<double>& u0, const FourierSeries<double>& u,
                             double t, int points);

}  // namespace vects1

#endif
