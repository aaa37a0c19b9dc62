#ifndef VECTS1_FLOWS_HPP
#define VECTS1_FLOWS_HPP

// Geodesic flows m_t = -X_k(m) on the regular dual.
//
// With m = A_k u this reads m_t + 2 u_x m + u m_x = 0. For k = 0 (u = m) it
// is the inviscid Burgers equation u_t + 3 u u_x = 0; for k = 1
// (m = u - u_xx) it is the Camassa-Holm equation
//   u_t + u u_x + D (1 - D^2)^{-1} (u^2 + u_x^2 / 2) = 0.
//
// evolve() integrates in coefficient space with classical RK4; products are
// formed on a uniform grid and the top third of the modes is zeroed after
// every right-hand-side evaluation (2/3 rule).

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "vects1/fourier.hpp"

namespace vects1 {

class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// -X_k(m), computed at full bandwidth (no truncation).
template <class T>
FourierSeries<T> flow_rhs(const FourierSeries<T>& m, int k);

/// -u u_x - D A_1^{-1}(u^2 + u_x^2 / 2), at full bandwidth.
template <class T>
FourierSeries<T> ch_u_form_rhs(const FourierSeries<T>& u);

struct FlowOptions {
  double breaking_threshold = 1e3;
  /// Record a state and an invariant row every `record_every` steps; the
  /// final state is always recorded.
  int record_every = 1;
  bool keep_states = true;
};

struct InvariantRecord {
  double h = 0.0;                       // h_k
  std::optional<double> h_second;       // h~_k, k in {0, 1}
  double mean = 0.0;                    // int m dx
  double max_abs_ux = 0.0;              // max over grid of |u_x|
};

struct FlowTrace {
  int k = 0;
  double dt = 0.0;
  int grid_points = 0;
  int kept_modes = 0;  // |j| <= kept_modes survive dealiasing
  std::vector<double> times;
  std::vector<FourierSeries<double>> states;
  std::vector<InvariantRecord> invariants;
  bool broke = false;
  std::string halt_reason;  // "completed" or "breaking"

  /// Magnitude scales from the initial datum: int |m| dx and the integral of
  /// the absolute value of the h~ integrand. Drifts of invariants whose value
  /// may vanish (mean, h~) are measured against these.
  double mean_scale = 0.0;
  double h_second_scale = 0.0;

  const FourierSeries<double>& final_state() const { return states.back(); }
  /// max_t |h_k(t) - h_k(0)| / |h_k(0)|
  double drift_h() const;
  /// max_t |mean(t) - mean(0)| / max(|mean(0)|, mean_scale)
  double drift_mean() const;
  /// max_t |h~(t) - h~(0)| / max(|h~(0)|, h_second_scale); 0 when k > 1.
  double drift_h_second() const;
};

/// Largest |j| kept by the 2/3 rule on a grid of `grid_points` samples.
int dealiased_max_freq(int grid_points);

/// Integrates m_t = -X_k(m) from m0 over [0, T]. Requires dt > 0, T >= 0,
/// grid_points a power of two with grid_points >= 4 * bandwidth(m0).
/// Throws InstabilityError on non-finite coefficients; halts early with
/// broke = true when max |u_x| exceeds the breaking threshold.
FlowTrace evolve(const FourierSeries<double>& m0, int k, double T, double dt, int grid_points,
                 const FlowOptions& options = {});

/// Invariant row for a single state (grid used for max |u_x|).
InvariantRecord measure_invariants(const FourierSeries<double>& m, int k, int grid_points);

/// CSV: t,h,h_second,mean,max_abs_ux[,re_j,im_j ...] with h_second empty when
/// not defined. Coefficient columns are appended when `with_coeffs`.
void write_trace_csv(std::ostream& os, const FlowTrace& trace, bool with_coeffs = false);

/// Run manifest (parameters, halt reason, drifts).
nlohmann::json manifest_json(const FlowTrace& trace, double T, const std::string& initial_datum);

}  // namespace vects1

#endif
