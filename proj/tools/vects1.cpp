// vects1: command-line front end.
//
// Exit codes: 0 success, 2 invalid configuration, 3 numeric or
// verification failure. Files carry the data; stdout carries one summary line.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vects1/burgers_reference.hpp"
#include "vects1/flows.hpp"
#include "vects1/init_expr.hpp"
#include "vects1/lie_poisson.hpp"
#include "vects1/obstruction.hpp"
#include "vects1/sobolev.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vects1;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string mode = "rational";
  std::string out = ".";
};

Mode parse_mode(const std::string& s) {
  if (s == "rational") return Mode::Rational;
  if (s == "float") return Mode::Float;
  throw ConfigError("--mode must be rational or float");
}

/// "3", "0..5", "1,2,7" or combinations such as "1..3,8".
std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != s.size()) throw ConfigError("bad integer '" + s + "' in " + what);
    return v;
  };
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
    } else {
      const int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

/// "a,b;c,d" -> pairs
template <class T>
std::vector<std::pair<T, T>> parse_pairs(const std::string& text) {
  std::vector<std::pair<T, T>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto comma = part.find(',');
    if (comma == std::string::npos) throw ConfigError("alpha,beta pair expected, got '" + part + "'");
    out.emplace_back(parse_scalar<T>(part.substr(0, comma)), parse_scalar<T>(part.substr(comma + 1)));
  }
  return out;
}

fs::path out_file(const Common& c, const std::string& name) {
  fs::create_directories(c.out);
  return fs::path(c.out) / name;
}

void write_json(const fs::path& p, const json& j) {
  std::ofstream os(p);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << j.dump(2) << '\n';
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string k = "0..5";
  int n_max = 6;
};

int run_classify(const Common& c, const ClassifyArgs& a) {
  const Mode mode = parse_mode(c.mode);
  const auto ks = parse_int_list(a.k, "--k");
  require(!ks.empty(), "--k selects no values");
  for (int k : ks) require(k >= 0, "--k must be nonnegative");
  require(a.n_max >= 2, "--n-max must be at least 2");

  json reports = json::array();
  std::string summary;
  bool all_verified = true;
  for (int k : ks) {
    const auto r = classify_k(k, a.n_max, mode);
    reports.push_back(to_json(r));
    all_verified = all_verified && r.verified;
    summary += (summary.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + ": " +
               to_string(r.kernel) + " (" + r.equation + ")";
  }
  write_json(out_file(c, "classify.json"),
             {{"schema", 1}, {"command", "classify"}, {"mode", c.mode}, {"n_max", a.n_max}, {"results", reports}});
  std::cout << summary << '\n';
  if (!all_verified) throw VerificationFailure("kernel failed back-substitution");
  return kExitOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string k = "0..3";
  std::string n = "1..8";
  std::string ab = "1,0;0,1;-1,1;2,-2";
  double tolerance = 1e-10;
};

template <class T>
int run_scan_typed(const Common& c, const ScanArgs& a) {
  const auto ks = parse_int_list(a.k, "--k");
  const auto ns = parse_int_list(a.n, "--n");
  const auto ab = parse_pairs<T>(a.ab);
  require(!ks.empty() && !ns.empty() && !ab.empty(), "scan grid is empty");
  for (int k : ks) require(k >= 0, "--k must be nonnegative");
  for (int n : ns) require(n >= 1, "--n must be positive");

  const auto cells = scan_grid<T>(ks, ns, ab);
  double worst = 0.0;
  bool exact = true;
  for (const auto& cell : cells) {
    worst = std::max(worst, cell.discrepancy);
    exact = exact && cell.exact_match;
  }
  {
    std::ofstream os(out_file(c, "scan.csv"));
    write_scan_csv(os, cells);
  }
  write_json(out_file(c, "scan.json"), {{"schema", 1},
                                        {"command", "scan"},
                                        {"mode", c.mode},
                                        {"cells", cells.size()},
                                        {"max_discrepancy", worst},
                                        {"exact_match", ScalarTraits<T>::exact ? json(exact) : json(nullptr)},
                                        {"tolerance", a.tolerance}});
  std::cout << "scan: " << cells.size() << " cells, max discrepancy " << worst;
  if constexpr (ScalarTraits<T>::exact) std::cout << (exact ? " (exact match)" : " (EXACT MISMATCH)");
  std::cout << '\n';
  if (worst > a.tolerance || (ScalarTraits<T>::exact && !exact))
    throw VerificationFailure("closed form disagrees with the matrix oracle");
  return kExitOk;
}

int run_scan(const Common& c, const ScanArgs& a) {
  return parse_mode(c.mode) == Mode::Rational ? run_scan_typed<Rational>(c, a) : run_scan_typed<double>(c, a);
}

// ---------------------------------------------------------------- cocycle-check

struct CocycleArgs {
  std::optional<std::string> m0;
  std::string beta = "0";
  int range = 6;
};

template <class T>
int run_cocycle_typed(const Common& c, const CocycleArgs& a) {
  require(a.range >= 0, "--range must be nonnegative");
  std::vector<std::pair<std::string, CocycleSpec<T>>> specs;
  if (a.m0) {
    specs.push_back({"m0=" + *a.m0 + ", beta=" + a.beta, {parse_series<T>(*a.m0), parse_scalar<T>(a.beta)}});
  } else {
    specs.push_back({"D", {FourierSeries<T>::constant(parse_scalar<T>("1/2")), T(0)}});
    specs.push_back({"D^3", {FourierSeries<T>::zero(), T(1)}});
    specs.push_back({"D - D^3", {FourierSeries<T>::constant(parse_scalar<T>("1/2")), T(-1)}});
    specs.push_back({"m0 = cos x", {parse_series<T>("cos x"), T(0)}});
    specs.push_back({"m0 = 1 + 1/2 sin 2x", {parse_series<T>("1 + 1/2 sin 2x"), T(0)}});
  }
  json reports = json::array();
  double worst = 0.0;
  bool exact = true;
  for (const auto& [label, spec] : specs) {
    const int n = 2 * a.range + std::max(0, spec.m0.bandwidth());
    const auto r = verify_cocycle(op_K(spec, n), a.range, label);
    reports.push_back(to_json(r));
    worst = std::max(worst, r.max_defect);
    exact = exact && r.exact_zero;
  }
  write_json(out_file(c, "cocycle.json"), {{"schema", 1}, {"command", "cocycle-check"}, {"mode", c.mode}, {"results", reports}});
  std::cout << "cocycle-check: " << specs.size() << " structures, |a|,|b|,|c| <= " << a.range
            << ", max defect " << worst << '\n';
  const bool ok = ScalarTraits<T>::exact ? exact : worst <= 1e-12;
  if (!ok) throw VerificationFailure("jacobi defect is nonzero");
  return kExitOk;
}

int run_cocycle(const Common& c, const CocycleArgs& a) {
  return parse_mode(c.mode) == Mode::Rational ? run_cocycle_typed<Rational>(c, a)
                                              : run_cocycle_typed<double>(c, a);
}

// ---------------------------------------------------------------- evolve

struct EvolveArgs {
  int k = 1;
  std::string init = "2cos";
  double T = 1.0;
  double dt = 1e-3;
  int grid = 128;
  double threshold = 1e3;
  int record_every = 1;
  bool dump_coeffs = false;
};

int run_evolve(const Common& c, const EvolveArgs& a) {
  parse_mode(c.mode);  // validated only; time stepping is always in double precision
  require(a.k >= 0, "--k must be nonnegative");
  require(a.dt > 0.0 && std::isfinite(a.dt), "--dt must be positive");
  require(a.T >= 0.0 && std::isfinite(a.T), "--T must be nonnegative");
  require(a.grid >= 4 && (a.grid & (a.grid - 1)) == 0, "--grid must be a power of two >= 4");
  require(a.threshold > 0.0, "--threshold must be positive");
  require(a.record_every >= 1, "--record-every must be >= 1");

  const auto m0 = parse_series<double>(a.init);
  require(a.grid >= 4 * std::max(0, m0.bandwidth()), "--grid must be at least 4 * bandwidth of the datum");

  FlowOptions opt;
  opt.breaking_threshold = a.threshold;
  opt.record_every = a.record_every;
  const auto tr = evolve(m0, a.k, a.T, a.dt, a.grid, opt);

  {
    std::ofstream os(out_file(c, "trace.csv"));
    write_trace_csv(os, tr, a.dump_coeffs);
  }
  auto manifest = manifest_json(tr, a.T, a.init);
  manifest["command"] = "evolve";
  manifest["arithmetic"] = "float";
  manifest["experiment_scale"] = "implementer-chosen";
  if (a.k == 0 && !tr.broke) {
    const double t_end = tr.times.back();
    const double t_break = burgers_breaking_time(m0);
    json oracle = {{"breaking_time", std::isfinite(t_break) ? json(t_break) : json(nullptr)}};
    if (t_end < t_break) {
      const double err = characteristics_error(m0, tr.final_state(), t_end, a.grid);
      oracle["sup_error"] = err;
      oracle["tolerance"] = 1e-6;
      oracle["match"] = err <= 1e-6;
    } else {
      oracle["match"] = nullptr;
    }
    manifest["characteristics_oracle"] = oracle;
  }
  write_json(out_file(c, "manifest.json"), manifest);

  std::cout << "evolve k=" << a.k << ": " << tr.halt_reason << " at t=" << tr.times.back()
            << ", drift h=" << tr.drift_h() << " mean=" << tr.drift_mean();
  if (a.k <= 1) std::cout << " h2=" << tr.drift_h_second();
  if (manifest.contains("characteristics_oracle") && manifest["characteristics_oracle"].contains("sup_error"))
    std::cout << ", characteristics error " << manifest["characteristics_oracle"]["sup_error"].get<double>();
  std::cout << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- crosscheck

struct CrosscheckArgs {
  int k = 1;
  int a = 1, b = -2, c = 1;
  std::string alpha = "-1";
  std::string beta = "1";
  std::optional<std::string> m0;
};

template <class T>
int run_crosscheck_typed(const Common& c, const CrosscheckArgs& x) {
  require(x.k >= 0, "--k must be nonnegative");
  const T beta = parse_scalar<T>(x.beta);
  CocycleSpec<T> spec = x.m0 ? CocycleSpec<T>{parse_series<T>(*x.m0), beta}
                             : CocycleSpec<T>::from_alpha_beta(parse_scalar<T>(x.alpha), beta);
  const int n = crosscheck_required_freq(x.a, x.b, x.c, std::max(0, spec.m0.bandwidth()));
  const auto matrix = crosscheck_matrix<T>(x.k, spec, x.a, x.b, x.c, n);

  json j = {{"schema", 1},  {"command", "crosscheck"}, {"mode", c.mode}, {"k", x.k},
            {"triple", {x.a, x.b, x.c}}, {"max_freq", n}};
  auto pair_json = [](const PairingPair<T>& p) {
    return json{{"lhs", {ScalarTraits<T>::str(p.first.re), ScalarTraits<T>::str(p.first.im)}},
                {"rhs", {ScalarTraits<T>::str(p.second.re), ScalarTraits<T>::str(p.second.im)}}};
  };
  j["matrix"] = pair_json(matrix);
  std::cout << "crosscheck k=" << x.k << " (" << x.a << "," << x.b << "," << x.c << "): matrix lhs="
            << matrix.first << " rhs=" << matrix.second;
  bool agree = true;
  if (spec.m0.bandwidth() <= 0) {
    const T alpha = T(2) * spec.m0[0].re;
    const auto closed = pairing_closed_form<T>(x.k, alpha, beta, x.a, x.b, x.c);
    j["closed_form"] = pair_json(closed);
    const double scale = std::max({1.0, abs(closed.first), abs(closed.second)});
    const double disc = std::max(abs(closed.first - matrix.first), abs(closed.second - matrix.second)) / scale;
    j["discrepancy"] = disc;
    agree = ScalarTraits<T>::exact ? (closed == matrix) : disc <= 1e-10;
    std::cout << ", closed form " << (agree ? "agrees" : "DISAGREES");
  }
  std::cout << '\n';
  write_json(out_file(c, "crosscheck.json"), j);
  if (!agree) throw VerificationFailure("closed form disagrees with the matrix oracle");
  return kExitOk;
}

int run_crosscheck(const Common& c, const CrosscheckArgs& a) {
  return parse_mode(c.mode) == Mode::Rational ? run_crosscheck_typed<Rational>(c, a)
                                              : run_crosscheck_typed<double>(c, a);
}

// ---------------------------------------------------------------- gradcheck

struct GradcheckArgs {
  std::string functional = "all";
  std::string at = "1 + 0.3cos x - 0.2 sin 2x";
  double step = kDefaultFdStep;
  double tolerance = 1e-6;
};

int run_gradcheck(const Common& c, const GradcheckArgs& a) {
  require(a.step > 0.0, "--step must be positive");
  std::vector<RegularFunctional> fs;
  auto add = [&](const std::string& name) {
    if (name == "ht0") fs.push_back(second_hamiltonian_functional(SecondHamiltonian::H0));
    else if (name == "ht1") fs.push_back(second_hamiltonian_functional(SecondHamiltonian::H1));
    else if (name.size() > 1 && name[0] == 'h') {
      const int k = std::stoi(name.substr(1));
      require(k >= 0 && k <= 8, "h_k needs 0 <= k <= 8");
      fs.push_back(h_k_functional(k));
    } else {
      throw ConfigError("unknown functional '" + name + "'");
    }
  };
  if (a.functional == "all") {
    for (const char* n : {"h0", "h1", "h2", "h3", "ht0", "ht1"}) add(n);
  } else {
    std::stringstream ss(a.functional);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        add(part);
      } catch (const std::logic_error& e) {
        throw ConfigError(std::string("bad --functional: ") + e.what());
      }
    }
  }
  require(!fs.empty(), "no functionals selected");
  const auto m = parse_series<double>(a.at);
  const auto dirs = default_directions();

  json results = json::array();
  double worst = 0.0;
  for (const auto& f : fs) {
    const double audit = gradient_audit(f, m, dirs, a.step);
    const double sym = gradient_symmetry_check(f, m, dirs, a.step);
    worst = std::max({worst, audit, sym});
    results.push_back({{"functional", f.name}, {"audit_relative_error", audit}, {"symmetry_defect", sym},
                       {"pass", audit <= a.tolerance && sym <= a.tolerance}});
  }
  write_json(out_file(c, "gradcheck.json"), {{"schema", 1},
                                             {"command", "gradcheck"},
                                             {"at", a.at},
                                             {"step", a.step},
                                             {"tolerance", a.tolerance},
                                             {"results", results}});
  std::cout << "gradcheck: " << fs.size() << " functionals, worst " << worst << " (tolerance " << a.tolerance
            << ")\n";
  if (worst > a.tolerance) throw VerificationFailure("gradient audit exceeded tolerance");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified Lie-Poisson structures and the H^k geodesic flows on the circle"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", common.mode, "Arithmetic: rational or float")->capture_default_str();
    sub->add_option("--out", common.out, "Output directory")->capture_default_str();
  };

  ClassifyArgs classify;
  auto* sc = app.add_subcommand("classify", "Kernel of the pairing defects in (alpha, beta)");
  sc->add_option("--k", classify.k, "k values: 3, 0..5 or 1,2")->capture_default_str();
  sc->add_option("--n-max", classify.n_max, "Largest n in the defect system")->capture_default_str();
  add_common(sc);

  ScanArgs scan;
  auto* ss = app.add_subcommand("scan", "Closed-form pairings against the matrix oracle");
  ss->add_option("--k", scan.k)->capture_default_str();
  ss->add_option("--n", scan.n)->capture_default_str();
  ss->add_option("--ab", scan.ab, "alpha,beta pairs separated by ';'")->capture_default_str();
  ss->add_option("--tolerance", scan.tolerance, "Relative discrepancy allowed in float mode")->capture_default_str();
  add_common(ss);

  CocycleArgs cocycle;
  auto* scc = app.add_subcommand("cocycle-check", "Jacobi defect of K = m0 D + D m0 + beta D^3");
  scc->add_option("--m0", cocycle.m0, "Trig expression; default runs the standard suite");
  scc->add_option("--beta", cocycle.beta)->capture_default_str();
  scc->add_option("--range", cocycle.range, "Largest |a|, |b|, |c|")->capture_default_str();
  add_common(scc);

  EvolveArgs ev;
  auto* se = app.add_subcommand("evolve", "Integrate m_t = -X_k(m)");
  se->add_option("--k", ev.k)->capture_default_str();
  se->add_option("--init", ev.init, "Initial datum, e.g. \"2cos\" or \"0.1 sin x\"")->capture_default_str();
  se->add_option("--T", ev.T)->capture_default_str();
  se->add_option("--dt", ev.dt)->capture_default_str();
  se->add_option("--grid", ev.grid)->capture_default_str();
  se->add_option("--threshold", ev.threshold, "Breaking threshold on max |u_x|")->capture_default_str();
  se->add_option("--record-every", ev.record_every)->capture_default_str();
  se->add_flag("--dump-coeffs", ev.dump_coeffs, "Append coefficient columns to trace.csv");
  add_common(se);

  CrosscheckArgs cc;
  auto* sx = app.add_subcommand("crosscheck", "One pairing triple by matrix action and closed form");
  sx->add_option("--k", cc.k)->capture_default_str();
  sx->add_option("--a", cc.a)->capture_default_str();
  sx->add_option("--b", cc.b)->capture_default_str();
  sx->add_option("--c", cc.c)->capture_default_str();
  sx->add_option("--alpha", cc.alpha)->capture_default_str();
  sx->add_option("--beta", cc.beta)->capture_default_str();
  sx->add_option("--m0", cc.m0, "Non-constant m0 (overrides --alpha)");
  add_common(sx);

  GradcheckArgs gc;
  auto* sg = app.add_subcommand("gradcheck", "Finite-difference audit of declared gradients");
  sg->add_option("--functional", gc.functional, "all, or a list of h0..h8, ht0, ht1")->capture_default_str();
  sg->add_option("--at", gc.at, "Base point")->capture_default_str();
  sg->add_option("--step", gc.step)->capture_default_str();
  sg->add_option("--tolerance", gc.tolerance)->capture_default_str();
  add_common(sg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sc) return run_classify(common, classify);
    if (*ss) return run_scan(common, scan);
    if (*scc) return run_cocycle(common, cocycle);
    if (*se) return run_evolve(common, ev);
    if (*sx) return run_crosscheck(common, cc);
    if (*sg) return run_gradcheck(common, gc);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const InstabilityError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const DegenerateFit& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const BandwidthError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitConfig;
}
