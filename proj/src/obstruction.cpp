#include "vects1/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include <Eigen/SVD>

#include "vects1/parallel.hpp"
#include "vects1/sobolev.hpp"

namespace vects1 {

template <class T>
OperatorMatrix<T> P_operator(const FourierSeries<T>& m, int k, const CocycleSpec<T>& spec,
                             int max_freq) {
  const int need = std::max(m.bandwidth(), 0) + std::max(spec.m0.bandwidth(), 0) + 1;
  if (max_freq < need) throw BandwidthError("N too small for the bands of m and m0");
  return compose(dX_k_operator(m, k, max_freq), op_K(spec, max_freq));
}

template <class T>
PairingPair<T> pairing_closed_form(int k, const T& alpha, const T& beta, int a, int b, int c) {
  const Complex<T> zero(T(0));
  if (a + b + c != 0) return {zero, zero};
  const T fa = sobolev_symbol_as<T>(k, a);
  // One side of the symmetry test: <P M, N> with s = b, or <M, P N> with s = c.
  auto side = [&](int s_int) {
    const T A = ScalarTraits<T>::from_int(a);
    const T s = ScalarTraits<T>::from_int(s_int);
    const T s2 = s * s;
    const T s3 = s2 * s;
    const T s4 = s3 * s;
    const T direct = (T(2) * A * s3 + s4) * beta - (T(2) * A * s + s2) * alpha;
    const T weighted = (A * s3 + T(2) * s4) * beta - (A * s + T(2) * s2) * alpha;
    return Complex<T>(direct + weighted * fa / sobolev_symbol_as<T>(k, s_int));
  };
  return {side(b), side(c)};
}

int crosscheck_required_freq(int a, int b, int c, int m0_bandwidth) {
  return std::abs(a) + std::max(std::abs(b), std::abs(c)) + std::max(m0_bandwidth, 0);
}

template <class T>
PairingPair<T> crosscheck_matrix(int k, const CocycleSpec<T>& spec, int a, int b, int c,
                                 int max_freq) {
  if (max_freq < crosscheck_required_freq(a, b, c, spec.m0.bandwidth()))
    throw BandwidthError("N too small for the tested frequency window");
  const auto m = FourierSeries<T>::exponential(a, Complex<T>(sobolev_symbol_as<T>(k, a)));
  const auto M = FourierSeries<T>::exponential(b);
  const auto N = FourierSeries<T>::exponential(c);
  const auto dx = dX_k_operator(m, k, max_freq);
  const auto kk = op_K(spec, max_freq);
  const auto pm = dx.apply(kk.apply(M));
  const auto pn = dx.apply(kk.apply(N));
  return {pairing(pm, N), pairing(M, pn)};
}

template <class T>
T defect_n(int k, const T& alpha, const T& beta, int n) {
  const T nn = ScalarTraits<T>::from_int(n);
  const T n2 = nn * nn;
  const T n4 = n2 * n2;
  const T lhs = (T(24) * n4 * beta - T(6) * n2 * alpha) * sobolev_symbol_as<T>(k, n) /
                sobolev_symbol_as<T>(k, 2 * static_cast<std::int64_t>(n));
  const T rhs = T(6) * n4 * beta - T(6) * n2 * alpha;
  return rhs - lhs;
}

Rational asymptotic_leading_coefficient(int k) {
  Rational p = 1;
  for (int i = 0; i < 2 * k; ++i) p /= 2;
  return Rational(6) * (Rational(1) - Rational(4) * p);
}

std::string to_string(KernelType t) {
  switch (t) {
    case KernelType::Plane: return "plane";
    case KernelType::Line: return "line";
    case KernelType::Point: return "point";
  }
  return "?";
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// "alpha + beta = 0" style text for c_a alpha + c_b beta = 0 with c_a, c_b
/// already normalized so the leading nonzero coefficient is 1.
std::string line_equation(const std::string& ca, const std::string& cb, bool a_zero, bool b_zero) {
  if (a_zero) return "beta = 0";
  if (b_zero) return "alpha = 0";
  std::string lhs = ca == "1" ? "alpha" : ca + " alpha";
  if (cb == "1") return lhs + " + beta = 0";
  if (cb == "-1") return lhs + " - beta = 0";
  if (!cb.empty() && cb[0] == '-') return lhs + " - " + cb.substr(1) + " beta = 0";
  return lhs + " + " + cb + " beta = 0";
}

double snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) <= 1e-9 * std::max(1.0, std::abs(v)) ? r : v;
}

void classify_rational(ClassificationResult& res) {
  const int k = res.k;
  std::vector<std::pair<Rational, Rational>> rows;
  for (int n = 1; n <= res.n_max; ++n) {
    rows.emplace_back(defect_n<Rational>(k, 1, 0, n), defect_n<Rational>(k, 0, 1, n));
    res.witnesses.push_back({n, "1", "0", rows.back().first.str(), rows.back().first.convert_to<double>()});
    res.witnesses.push_back({n, "0", "1", rows.back().second.str(), rows.back().second.convert_to<double>()});
  }
  const auto pivot = std::find_if(rows.begin(), rows.end(),
                                  [](const auto& r) { return r.first != 0 || r.second != 0; });
  if (pivot == rows.end()) {
    res.kernel = KernelType::Plane;
    res.equation = "any";
    res.verified = true;
    return;
  }
  const Rational p = pivot->first, q = pivot->second;
  const auto independent = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
    return p * r.second - q * r.first != 0;
  });
  if (independent != rows.end()) {
    res.kernel = KernelType::Point;
    res.equation = "alpha = beta = 0";
    // Two independent n already pin the origin; confirm the 2x2 determinant directly.
    const int n1 = static_cast<int>(pivot - rows.begin()) + 1;
    const int n2 = static_cast<int>(independent - rows.begin()) + 1;
    const Rational det = defect_n<Rational>(k, 1, 0, n1) * defect_n<Rational>(k, 0, 1, n2) -
                         defect_n<Rational>(k, 0, 1, n1) * defect_n<Rational>(k, 1, 0, n2);
    res.verified = det != 0;
    return;
  }
  res.kernel = KernelType::Line;
  const Rational lead = p != 0 ? p : q;
  const Rational ca = p / lead, cb = q / lead;
  res.normal = {ca.convert_to<double>(), cb.convert_to<double>()};
  res.equation = line_equation(ca.str(), cb.str(), ca == 0, cb == 0);
  // Direction (-cb, ca) must annihilate every defect.
  res.verified = true;
  for (int n = 1; n <= res.n_max; ++n)
    if (defect_n<Rational>(k, -cb, ca, n) != 0) res.verified = false;
}

void classify_float(ClassificationResult& res) {
  const int k = res.k;
  Eigen::MatrixXd a(res.n_max, 2);
  for (int n = 1; n <= res.n_max; ++n) {
    const double da = defect_n<double>(k, 1.0, 0.0, n);
    const double db = defect_n<double>(k, 0.0, 1.0, n);
    res.witnesses.push_back({n, "1", "0", fmt_double(da), da});
    res.witnesses.push_back({n, "0", "1", fmt_double(db), db});
    const double scale = std::max(std::abs(da), std::abs(db));
    a(n - 1, 0) = scale > 0 ? da / scale : 0.0;
    a(n - 1, 1) = scale > 0 ? db / scale : 0.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) res.singular_values.push_back(sv(i));
  constexpr double kThreshold = 1e-9;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(0) > 0 && sv(i) > kThreshold * sv(0)) ++rank;

  if (rank == 0) {
    res.kernel = KernelType::Plane;
    res.equation = "any";
    res.verified = true;
    return;
  }
  if (rank == 2) {
    res.kernel = KernelType::Point;
    res.equation = "alpha = beta = 0";
    res.verified = sv(1) > kThreshold * sv(0);
    return;
  }
  res.kernel = KernelType::Line;
  const Eigen::Vector2d normal = svd.matrixV().col(0);
  const bool a_zero = std::abs(normal(0)) <= kThreshold;
  const double lead = a_zero ? normal(1) : normal(0);
  const double ca = snap(normal(0) / lead), cb = snap(normal(1) / lead);
  res.normal = {ca, cb};
  res.equation = line_equation(fmt_double(ca), fmt_double(cb), a_zero,
                               std::abs(cb) <= kThreshold);
  res.verified = true;
  for (int n = 1; n <= res.n_max; ++n) {
    const double d = defect_n<double>(k, -cb, ca, n);
    const double scale = std::abs(defect_n<double>(k, 1.0, 0.0, n)) +
                         std::abs(defect_n<double>(k, 0.0, 1.0, n));
    if (std::abs(d) > kThreshold * std::max(scale, 1.0)) res.verified = false;
  }
}

}  // namespace

ClassificationResult classify_k(int k, int n_max, Mode mode) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  ClassificationResult res;
  res.k = k;
  res.n_max = n_max;
  res.mode = mode;
  if (mode == Mode::Rational)
    classify_rational(res);
  else
    classify_float(res);
  return res;
}

nlohmann::json to_json(const ClassificationResult& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"n", w.n}, {"alpha", w.alpha}, {"beta", w.beta}, {"defect", w.defect}});
  nlohmann::json out = {
      {"schema", 1},
      {"k", r.k},
      {"n_max", r.n_max},
      {"mode", r.mode == Mode::Rational ? "rational" : "float"},
      {"kernel", {{"type", to_string(r.kernel)}, {"equation", r.equation}}},
      {"verified", r.verified},
      {"witnesses", witnesses},
  };
  if (r.kernel == KernelType::Line) out["kernel"]["normal"] = {r.normal.first, r.normal.second};
  if (!r.singular_values.empty()) out["singular_values"] = r.singular_values;
  return out;
}

std::vector<int> default_r_list(int k) {
  std::vector<int> r;
  for (int v = 2; static_cast<int>(r.size()) < 4 * k + 3; ++v) {
    r.push_back(v);
    if (static_cast<int>(r.size()) < 4 * k + 3) r.push_back(-v);
  }
  return r;
}

LeadingTerm m0_leading_term(int k, const FourierSeries<double>& m0, double x,
                            const std::vector<int>& r_list) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const std::set<int> distinct(r_list.begin(), r_list.end());
  if (static_cast<int>(distinct.size()) != static_cast<int>(r_list.size()))
    throw std::invalid_argument("r values must be distinct");
  if (static_cast<int>(r_list.size()) < 4 * k + 3)
    throw std::invalid_argument("need at least 4k+3 interpolation nodes");
  int r_max = 0;
  for (int r : r_list) {
    if (std::abs(r) < 2) throw std::invalid_argument("interpolation nodes need |r| >= 2");
    r_max = std::max(r_max, std::abs(r));
  }

  const int bw = std::max(m0.bandwidth(), 0);
  const int n = r_max + 2 * bw + 2;
  const CocycleSpec<double> spec{m0, 0.0};
  const auto p = P_operator(FourierSeries<double>::constant(1.0), k, spec, n);
  const auto a = op_A<double>(k, n);
  const auto q = compose(a, compose(p - bilinear_adjoint(p), a));

  LeadingTerm out;
  const std::size_t count = r_list.size();
  for (int r : r_list) {
    std::vector<Complex<double>> column(2 * static_cast<std::size_t>(n) + 1);
    for (int j = -n; j <= n; ++j) column[j + n] = q(j, r);
    const auto image = FourierSeries<double>(n, std::move(column));
    out.samples.push_back(image.evaluate(x) * std::polar(1.0, -r * x));
  }

  // Newton divided differences, then expansion into monomial coefficients.
  std::vector<std::complex<double>> dd(out.samples);
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / static_cast<double>(r_list[i] - r_list[i - level]);
  std::vector<std::complex<double>> poly(count, 0.0);
  for (std::size_t i = count; i-- > 0;) {
    // poly <- poly * (r - r_i) + dd[i]
    std::vector<std::complex<double>> next(count, 0.0);
    for (std::size_t d = 0; d + 1 < count; ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * static_cast<double>(r_list[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  out.coefficients = poly;

  double scale = 0.0;
  for (const auto& g : out.samples) scale = std::max(scale, std::abs(g));
  if (scale > 0.0) {
    for (std::size_t d = count; d-- > 0;) {
      if (std::abs(poly[d]) * std::pow(static_cast<double>(r_max), static_cast<double>(d)) >
          1e-9 * scale) {
        out.degree = static_cast<int>(d);
        out.leading_coeff = poly[d];
        break;
      }
    }
  }
  if (m0.bandwidth() > 0 && out.degree < 4 * k + 1)
    throw DegenerateFit("fitted degree " + std::to_string(out.degree) + " below 4k+1 = " +
                        std::to_string(4 * k + 1) + "; m0'(x) vanishes at this point");
  return out;
}

template <class T>
std::vector<ScanCell> scan_grid(const std::vector<int>& ks, const std::vector<int>& ns,
                                const std::vector<std::pair<T, T>>& alpha_beta) {
  struct Job {
    int k, n;
    std::size_t ab;
  };
  std::vector<Job> jobs;
  for (int k : ks)
    for (int n : ns)
      for (std::size_t i = 0; i < alpha_beta.size(); ++i) jobs.push_back({k, n, i});
  std::vector<ScanCell> cells(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t idx) {
    const auto [k, n, i] = jobs[idx];
    const auto& [alpha, beta] = alpha_beta[i];
    const auto closed = pairing_closed_form<T>(k, alpha, beta, n, -2 * n, n);
    const auto spec = CocycleSpec<T>::from_alpha_beta(alpha, beta);
    const auto oracle =
        crosscheck_matrix<T>(k, spec, n, -2 * n, n, crosscheck_required_freq(n, -2 * n, n, 0));
    ScanCell& cell = cells[idx];
    cell.k = k;
    cell.n = n;
    cell.alpha = ScalarTraits<T>::str(alpha);
    cell.beta = ScalarTraits<T>::str(beta);
    cell.lhs = ScalarTraits<T>::str(closed.first.re);
    cell.rhs = ScalarTraits<T>::str(closed.second.re);
    cell.defect = ScalarTraits<T>::str(T(closed.second.re - closed.first.re));
    const double scale = std::max({1.0, abs(closed.first), abs(closed.second)});
    cell.discrepancy =
        std::max(abs(closed.first - oracle.first), abs(closed.second - oracle.second)) / scale;
    cell.exact_match = closed.first == oracle.first && closed.second == oracle.second;
  });
  return cells;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanCell>& cells) {
  os << "k,n,alpha,beta,lhs,rhs,defect\n";
  for (const auto& c : cells)
    os << c.k << ',' << c.n << ',' << c.alpha << ',' << c.beta << ',' << c.lhs << ',' << c.rhs
       << ',' << c.defect << '\n';
}

#define VECTS1_INSTANTIATE(T)                                                                      \
  template OperatorMatrix<T> P_operator(const FourierSeries<T>&, int, const CocycleSpec<T>&, int); \
  template PairingPair<T> pairing_closed_form(int, const T&, const T&, int, int, int);             \
  template PairingPair<T> crosscheck_matrix(int, const CocycleSpec<T>&, int, int, int, int);       \
  template T defect_n(int, const T&, const T&, int);                                               \
  template std::vector<ScanCell> scan_grid(const std::vector<int>&, const std::vector<int>&,       \
                                           const std::vector<std::pair<T, T>>&);

VECTS1_INSTANTIATE(double)
VECTS1_INSTANTIATE(Rational)

}  // namespace vects1
