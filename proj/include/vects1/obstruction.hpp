#ifndef VECTS1_OBSTRUCTION_HPP
#define VECTS1_OBSTRUCTION_HPP

// Which modified Lie-Poisson structures K can make X_k Hamiltonian?
//
// A necessary condition is that P(m) = dX_k(m) o K be symmetric for the
// bilinear pairing. Testing <P(m)M, N> = <M, P(m)N> on exponentials
// m = A_k e^{iax}, M = e^{ibx}, N = e^{icx} gives closed forms that are
// linear in (alpha, beta) for constant m0 = alpha/2; on the diagonal
// (a, b, c) = (n, -2n, n) they reduce to
//   <P M, N> = (24 n^4 beta - 6 n^2 alpha) f_k(n) / f_k(2n)
//   <M, P N> =  6 n^4 beta - 6 n^2 alpha.
// The kernel of (alpha, beta) -> (defect_n)_n decides the classification.
// A non-constant m0 is excluded separately by the leading r-power of
// A_k (P(1) - P(1)*) A_k e^{irx}.
//
// Every pairing value in this module is divided by 2*pi.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "vects1/fourier.hpp"
#include "vects1/lie_poisson.hpp"
#include "vects1/operator.hpp"

namespace vects1 {

class DegenerateFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(m) = dX_k(m) o K. Throws BandwidthError when N cannot hold the band of
/// m and m0.
template <class T>
OperatorMatrix<T> P_operator(const FourierSeries<T>& m, int k, const CocycleSpec<T>& spec, int max_freq);

template <class T>
using PairingPair = std::pair<Complex<T>, Complex<T>>;

/// (<P(m)M, N>, <M, P(m)N>) / 2pi from the closed forms, m = A_k e^{iax},
/// M = e^{ibx}, N = e^{icx}, K = alpha D + beta D^3. (0, 0) unless a+b+c = 0.
template <class T>
PairingPair<T> pairing_closed_form(int k, const T& alpha, const T& beta, int a, int b, int c);

/// Same pairings by explicit matrix action, for any cocycle spec. Throws
/// BandwidthError when N < |a| + max(|b|, |c|) + bandwidth(m0).
template <class T>
PairingPair<T> crosscheck_matrix(int k, const CocycleSpec<T>& spec, int a, int b, int c, int max_freq);

/// Smallest N accepted by crosscheck_matrix.
int crosscheck_required_freq(int a, int b, int c, int m0_bandwidth);

/// <M, P N> - <P M, N> at (a, b, c) = (n, -2n, n); exactly linear in (alpha, beta).
template <class T>
T defect_n(int k, const T& alpha, const T& beta, int n);

/// 6 (1 - 4 * 2^{-2k}): the limit of defect_n(k, 0, 1, n) / n^4.
Rational asymptotic_leading_coefficient(int k);

enum class KernelType { Plane, Line, Point };
std::string to_string(KernelType t);

struct Witness {
  int n = 0;
  std::string alpha;
  std::string beta;
  std::string defect;      // exact value in rational mode, %.17g in float mode
  double defect_value = 0.0;
};

struct ClassificationResult {
  int k = 0;
  int n_max = 0;
  Mode mode = Mode::Rational;
  KernelType kernel = KernelType::Point;
  /// "alpha + beta = 0", "beta = 0", "alpha = beta = 0" or "any".
  std::string equation;
  /// Normal (c_alpha, c_beta) of the kernel line c_alpha alpha + c_beta beta = 0.
  std::pair<double, double> normal{0.0, 0.0};
  /// Singular values (float mode) of the row-normalized defect matrix.
  std::vector<double> singular_values;
  std::vector<Witness> witnesses;
  /// The returned kernel has been checked back against defect_n at every n.
  bool verified = false;
};

/// Kernel of (alpha, beta) -> (defect_n(k, alpha, beta, n))_{n=1..n_max}.
/// Rational mode: exact elimination. Float mode: SVD with relative
/// singular-value threshold 1e-9 on the row-normalized matrix.
ClassificationResult classify_k(int k, int n_max, Mode mode = Mode::Rational);

nlohmann::json to_json(const ClassificationResult& r);

struct LeadingTerm {
  int degree = -1;  // -1 for the zero polynomial
  std::complex<double> leading_coeff{0.0, 0.0};
  std::vector<std::complex<double>> coefficients;  // monomial, ascending
  std::vector<std::complex<double>> samples;       // g(r) for each r
};

/// Fits g(r) = e^{-irx} [A_k (P(1) - P(1)*) A_k e^{irx}](x) with K = m0 D + D m0
/// by interpolation over r_list. The zero polynomial is returned for constant
/// m0; DegenerateFit is thrown when a non-constant m0 yields degree < 4k+1.
LeadingTerm m0_leading_term(int k, const FourierSeries<double>& m0, double x,
                            const std::vector<int>& r_list);

/// 4k+3 distinct integers with |r| >= 2, alternating in sign from +-2.
std::vector<int> default_r_list(int k);

struct ScanCell {
  int k = 0;
  int n = 0;
  std::string alpha;
  std::string beta;
  std::string lhs;      // closed-form <P M, N> / 2pi
  std::string rhs;      // closed-form <M, P N> / 2pi
  std::string defect;   // rhs - lhs
  double discrepancy = 0.0;  // closed form vs matrix oracle, relative
  bool exact_match = false;  // rational mode: oracle agrees exactly
};

/// Closed form and matrix oracle over the (k, n, alpha, beta) grid.
template <class T>
std::vector<ScanCell> scan_grid(const std::vector<int>& ks, const std::vector<int>& ns,
                                const std::vector<std::pair<T, T>>& alpha_beta);

/// Header "k,n,alpha,beta,lhs,rhs,defect".
void write_scan_csv(std::ostream& os, const std::vector<ScanCell>& cells);

}  // namespace vects1

#endif
