#ifndef VECTS1_LIE_POISSON_HPP
#define VECTS1_LIE_POISSON_HPP

// Lie algebra of vector fields on the circle, its canonical Lie-Poisson
// operator J(m) = mD + Dm, and the modified structures
// K = m0 D + D m0 + beta D^3 obtained by adding a differential 2-cocycle.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "vects1/fourier.hpp"
#include "vects1/operator.hpp"

namespace vects1 {

/// [u, v] = u v_x - u_x v
template <class T>
FourierSeries<T> lie_bracket(const FourierSeries<T>& u, const FourierSeries<T>& v);

/// Matrix of J(m) = mD + Dm; (J(m) v) = 2 m v_x + m_x v.
template <class T>
OperatorMatrix<T> op_J(const FourierSeries<T>& m, int max_freq);

/// Modified-structure datum. The operator is K = m0 D + D m0 + beta D^3;
/// reports quote alpha = 2 m0 when m0 is constant.
template <class T>
struct CocycleSpec {
  FourierSeries<T> m0;
  T beta{};

  /// K = alpha/2 * 2D + beta D^3 with constant m0 = alpha / 2.
  static CocycleSpec from_alpha_beta(const T& alpha, const T& beta) {
    return {FourierSeries<T>::constant(alpha / T(2)), beta};
  }
};

template <class T>
OperatorMatrix<T> op_K(const CocycleSpec<T>& spec, int max_freq);

/// Cyclic sum <[u,v], Kw> + <[v,w], Ku> + <[w,u], Kv> for u, v, w =
/// e^{iax}, e^{ibx}, e^{icx}, divided by 2*pi. Vanishes for every 2-cocycle.
/// Throws BandwidthError when |a|, |b|, |c| or their pairwise sums exceed N.
template <class T>
Complex<T> jacobi_defect(const OperatorMatrix<T>& k, int a, int b, int c);

struct CocycleReport {
  std::string spec;
  int max_freq = 0;
  int triple_range = 0;
  double max_defect = 0.0;
  bool exact_zero = false;  // rational mode: every defect is exactly 0
  long triples_checked = 0;
};

/// Scans every triple with |a|, |b|, |c| <= triple_range.
template <class T>
CocycleReport verify_cocycle(const OperatorMatrix<T>& k, int triple_range, std::string label);

nlohmann::json to_json(const CocycleReport& r);

/// A real-valued functional on trig polynomials together with its declared
/// L2 gradient: df(m) M = int M grad(m) dx.
struct RegularFunctional {
  std::string name;
  std::function<double(const FourierSeries<double>&)> value;
  std::function<FourierSeries<double>(const FourierSeries<double>&)> gradient;
};

/// f_u(m) = int u m dx, gradient u.
RegularFunctional linear_functional(const FourierSeries<double>& u);

/// {f, g}(m) = int grad f(m) * structure grad g(m) dx
double poisson_bracket(const RegularFunctional& f, const RegularFunctional& g,
                       const FourierSeries<double>& m, const OperatorMatrix<double>& structure);

using StructureAt = std::function<OperatorMatrix<double>(const FourierSeries<double>&)>;

/// m -> J(m) at truncation `max_freq`.
StructureAt canonical_structure(int max_freq);

/// X_f(m) = structure(m) grad f(m)
FourierSeries<double> hamiltonian_field(const RegularFunctional& f, const StructureAt& structure_at,
                                        const FourierSeries<double>& m);

/// {1, sin x, cos x, sin 2x, cos 2x}
std::vector<FourierSeries<double>> default_directions();

constexpr double kDefaultFdStep = 1e-5;

/// Max over direction pairs (M, N) of |<d grad f(m) M, N> - <d grad f(m) N, M>|,
/// with d grad f(m) M taken by central differences. A true gradient gives
/// only discretization-level asymmetry.
double gradient_symmetry_check(const RegularFunctional& f, const FourierSeries<double>& m,
                               const std::vector<FourierSeries<double>>& dirs,
                               double step = kDefaultFdStep);

/// Max over directions of |fd - <M, grad f(m)>| / max(1, |<M, grad f(m)>|)
/// where fd is the central difference of f along M.
double gradient_audit(const RegularFunctional& f, const FourierSeries<double>& m,
                      const std::vector<FourierSeries<double>>& dirs,
                      double step = kDefaultFdStep);

}  // namespace vects1

#endif
