// symwalk: command-line front end for the bounds, jsr, simulation and
// estimation routines in symwalk::core.
#include "symwalk/errors.hpp"
#include "symwalk/fourier.hpp"
#include "symwalk/io.hpp"
#include "symwalk/jsr.hpp"
#include "symwalk/montecarlo.hpp"
#include "symwalk/symrep.hpp"
#include "symwalk/walks.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace symwalk;

namespace {

// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 infeasible plan,
// 4 internal error.
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> config_path;

  // space
  std::optional<std::string> space;
  std::optional<std::string> tabloids;
  std::optional<int> tours;
  std::optional<int> n;

  // distributions and walk length
  std::vector<std::string> dist;
  std::optional<int> class_cycle;
  std::optional<int> N;
  std::optional<std::string> sweep_N;
  std::optional<std::uint64_t> start;

  // output
  std::optional<std::string> out;
  std::optional<std::string> csv;
  bool exhaustive_check = false;

  // jsr
  std::optional<std::string> matrices;
  std::optional<std::string> cert;
  std::optional<std::string> cert_prefix;
  std::vector<int> degrees;
  std::optional<int> depth;
  std::optional<double> tol;
  std::optional<std::uint64_t> budget;

  // sampling
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> M;
  std::optional<double> eps;
  std::optional<double> eta;
  std::optional<double> tv_bound;
  std::optional<std::uint64_t> indicator;
  std::optional<std::string> matrix;
  std::optional<double> beta;

  // fourier
  std::optional<std::string> shape;
  std::optional<std::size_t> dim_cap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- config overlay ------------------------------------------------------

template <typename T>
T json_as(const Json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const Json::exception&) {
    throw UsageError("config key '" + key + "' has the wrong type");
  }
}

std::vector<std::string> string_list(const Json& v, const std::string& key) {
  if (v.is_string()) return {v.get<std::string>()};
  return json_as<std::vector<std::string>>(v, key);
}

// The config file overrides flags. Keys are the long flag names; keys the
// subcommand does not accept are rejected.
void apply_config(RunConfig& cfg, const std::set<std::string>& allowed) {
  if (!cfg.config_path) return;
  Json j;
  try {
    j = read_json_file(*cfg.config_path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (!allowed.count(key)) {
      throw UsageError("unknown config key '" + key + "' for " + cfg.subcommand);
    }
    if (key == "space") cfg.space = json_as<std::string>(v, key);
    else if (key == "tabloids") cfg.tabloids = json_as<std::string>(v, key);
    else if (key == "tours") cfg.tours = json_as<int>(v, key);
    else if (key == "n") cfg.n = json_as<int>(v, key);
    else if (key == "dist") cfg.dist = string_list(v, key);
    else if (key == "class-cycle") cfg.class_cycle = json_as<int>(v, key);
    else if (key == "N") cfg.N = json_as<int>(v, key);
    else if (key == "sweep-N") cfg.sweep_N = json_as<std::string>(v, key);
    else if (key == "start") cfg.start = json_as<std::uint64_t>(v, key);
    else if (key == "out") cfg.out = json_as<std::string>(v, key);
    else if (key == "csv") cfg.csv = json_as<std::string>(v, key);
    else if (key == "exhaustive-check") cfg.exhaustive_check = json_as<bool>(v, key);
    else if (key == "matrices") cfg.matrices = json_as<std::string>(v, key);
    else if (key == "cert") cfg.cert = json_as<std::string>(v, key);
    else if (key == "cert-prefix") cfg.cert_prefix = json_as<std::string>(v, key);
    else if (key == "degrees") cfg.degrees = json_as<std::vector<int>>(v, key);
    else if (key == "depth") cfg.depth = json_as<int>(v, key);
    else if (key == "tol") cfg.tol = json_as<double>(v, key);
    else if (key == "budget") cfg.budget = json_as<std::uint64_t>(v, key);
    else if (key == "seed") cfg.seed = json_as<std::uint64_t>(v, key);
    else if (key == "M") cfg.M = json_as<std::uint64_t>(v, key);
    else if (key == "eps") cfg.eps = json_as<double>(v, key);
    else if (key == "eta") cfg.eta = json_as<double>(v, key);
    else if (key == "tv-bound") cfg.tv_bound = json_as<double>(v, key);
    else if (key == "indicator") cfg.indicator = json_as<std::uint64_t>(v, key);
    else if (key == "matrix") cfg.matrix = json_as<std::string>(v, key);
    else if (key == "beta") cfg.beta = json_as<double>(v, key);
    else if (key == "shape") cfg.shape = json_as<std::string>(v, key);
    else if (key == "dim-cap") cfg.dim_cap = json_as<std::size_t>(v, key);
    else throw UsageError("config key '" + key + "' is not supported");
  }
}

// --- shared option groups ----------------------------------------------

void add_space_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--space", cfg.space,
                  "group, tabloids:<shape>, tours:<n> (bare group/tours take --n)");
  app->add_option("--tabloids", cfg.tabloids, "tabloid shape, e.g. 26+26");
  app->add_option("--tours", cfg.tours, "cyclic tours through n cities");
  app->add_option("--n", cfg.n, "degree of the symmetric group");
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--config", cfg.config_path, "JSON file whose keys override the flags");
  app->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
}

// --- resolution ------------------------------------------------------------

HomogeneousSpace resolve_space(const RunConfig& cfg) {
  int given = cfg.space.has_value() + cfg.tabloids.has_value() + cfg.tours.has_value();
  if (given > 1) throw UsageError("give one of --space, --tabloids, --tours");
  if (cfg.tabloids) return HomogeneousSpace::tabloids(parse_partition(*cfg.tabloids));
  if (cfg.tours) return HomogeneousSpace::tours(*cfg.tours);
  if (!cfg.space) {
    if (cfg.n) return HomogeneousSpace::group(*cfg.n);
    throw UsageError("no space given (--space, --tabloids, --tours or --n)");
  }
  const std::string& s = *cfg.space;
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto degree = [&]() -> int {
    if (!arg.empty()) {
      try {
        return std::stoi(arg);
      } catch (const std::exception&) {
        throw UsageError("bad degree in --space " + s);
      }
    }
    if (!cfg.n) throw UsageError("--space " + s + " needs --n");
    return *cfg.n;
  };
  if (head == "group") return HomogeneousSpace::group(degree());
  if (head == "tours") return HomogeneousSpace::tours(degree());
  if (head == "tabloids") {
    if (arg.empty()) throw UsageError("--space tabloids needs a shape, e.g. tabloids:2+1");
    return HomogeneousSpace::tabloids(parse_partition(arg));
  }
  throw UsageError("unknown space '" + s + "'");
}

std::vector<DistributionSpec> resolve_dists(const RunConfig& cfg, int n) {
  std::vector<DistributionSpec> out;
  if (cfg.class_cycle) {
    out.push_back(parse_distribution_spec("uniform_class:" + std::to_string(*cfg.class_cycle), n));
  }
  for (const auto& d : cfg.dist) out.push_back(parse_distribution_spec(d, n));
  if (out.empty()) throw UsageError("no distribution given (--dist or --class-cycle)");
  return out;
}

DistributionSpec single_dist(const RunConfig& cfg, int n) {
  auto ds = resolve_dists(cfg, n);
  if (ds.size() != 1) throw UsageError(cfg.subcommand + " takes exactly one distribution");
  return ds.front();
}

int require_N(const RunConfig& cfg) {
  if (!cfg.N) throw UsageError("--N is required");
  if (*cfg.N < 0) throw UsageError("--N must be nonnegative");
  return *cfg.N;
}

State start_state(const RunConfig& cfg, const HomogeneousSpace& x) {
  if (!cfg.start) return x.base_point();
  if (BigInt(*cfg.start) >= x.size()) throw UsageError("--start is outside the space");
  return x.unrank(*cfg.start);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const RunConfig& cfg, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out) {
    write_text_file(*cfg.out, text);
  } else {
    std::cout << text;
  }
}

// --- bounds ----------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(s);
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    const std::string a = s.substr(0, colon);
    const std::string b = s.substr(colon + 1);
    const int lo = std::stoi(a, &u1);
    const int hi = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size() || lo < 0 || hi < lo) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("--sweep-N expects a:b with 0 <= a <= b");
  }
}

int cmd_bounds(RunConfig& cfg) {
  apply_config(cfg, {"space", "tabloids", "tours", "n", "dist", "class-cycle", "N", "sweep-N",
                     "out", "csv", "exhaustive-check"});
  const auto x = resolve_space(cfg);
  const auto spec = single_dist(cfg, x.n());

  if (cfg.sweep_N) {
    if (cfg.N) throw UsageError("give either --N or --sweep-N");
    if (cfg.exhaustive_check) throw UsageError("--exhaustive-check needs a single --N");
    const auto [lo, hi] = parse_range(*cfg.sweep_N);
    const Partition shape = x.kind() == HomogeneousSpace::Kind::Tabloids ? x.shape() : Partition{};
    const bool two_row = cfg.class_cycle && shape.length() == 2;
    std::optional<GroupDistribution> g;
    if (!spec.is_class()) g = spec.group();
    std::ostringstream csv;
    csv << "N,bound\n";
    for (int N = lo; N <= hi; ++N) {
      double b = 0.0;
      if (two_row) {
        b = tabloid_cycle_bound(x.n(), shape[0], shape[1], *cfg.class_cycle, N);
      } else if (spec.is_class()) {
        b = class_function_bound(*spec.by_class, x, N);
      } else {
        b = average_tv_sandwich(*g, x, N).upper_avg;
      }
      csv << N << ',' << fmt_double(b) << '\n';
    }
    if (cfg.csv) {
      write_text_file(*cfg.csv, csv.str());
    } else {
      std::cout << csv.str();
    }
    return 0;
  }

  const int N = require_N(cfg);
  BoundReport rep = spec.is_class() ? average_tv_sandwich(*spec.by_class, x, N)
                                    : average_tv_sandwich(spec.group(), x, N);
  Json extra = Json::object();
  if (cfg.exhaustive_check) {
    const double ex = exhaustive_average_tv_sq(spec.group(), x, N);
    rep.exhaustive_avg_tv_sq = ex;
    extra["exhaustive_inside"] = rep.lower_avg <= ex + 1e-12 && ex <= rep.upper_avg + 1e-12;
  }
  // enumeration only under --exhaustive-check; the cheap conditions always run
  std::optional<StartIndependence> si;
  if (spec.is_class()) {
    si = StartIndependence{true, "class_invariant", 0.0};
  } else if (x.kind() == HomogeneousSpace::Kind::Group || cfg.exhaustive_check) {
    si = start_independent_norm(spec.group(), x, N);
  }
  if (si) {
    extra["start_independent"] = si->holds;
    extra["start_independent_reason"] = si->reason;
    if (si->holds) extra["every_start_upper"] = rep.upper_avg;
  }
  Json body = to_json(rep);
  body["distribution"] = spec.text;
  for (const auto& [k, v] : extra.items()) body[k] = v;
  if (cfg.csv) write_text_file(*cfg.csv, "N,bound\n" + std::to_string(N) + "," +
                                             fmt_double(rep.upper_avg) + "\n");
  emit(cfg, versioned("bound_report", body));
  return 0;
}

// --- jsr -----------------------------------------------------------------

JsrOptions jsr_options(const RunConfig& cfg) {
  JsrOptions o;
  if (!cfg.degrees.empty()) {
    for (int d : cfg.degrees) {
      if (d < 1) throw UsageError("--degrees entries must be >= 1");
    }
    o.degrees = cfg.degrees;
  }
  if (cfg.depth) o.max_depth = *cfg.depth;
  if (cfg.tol) o.tol = *cfg.tol;
  if (cfg.budget) o.product_budget = *cfg.budget;
  return o;
}

void write_certificate(const std::string& path, const NormCertificate& c, const MatrixSet& s) {
  write_text_file(path, versioned("certificate", to_json(c)).dump(2) + "\n");
  const auto dot = path.rfind(".cert.json");
  const std::string mpath =
      (dot == std::string::npos ? path : path.substr(0, dot)) + ".matrices.json";
  write_text_file(mpath, versioned("matrix_set", to_json(s)).dump(2) + "\n");
}

int cmd_jsr(RunConfig& cfg) {
  apply_config(cfg, {"space", "tabloids", "tours", "n", "dist", "class-cycle", "out", "matrices",
                     "cert", "cert-prefix", "degrees", "depth", "tol", "budget"});
  const JsrOptions opts = jsr_options(cfg);

  if (cfg.matrices) {
    const MatrixSet s = matrix_set_from_json(check_version(read_json_file(*cfg.matrices)));
    const JsrEstimate e = jsr_estimate(s, opts);
    Json body = to_json(e);
    body["verdict"] = mixing_verdict(e.lower, e.upper);
    if (e.budget_exhausted) body["warning"] = "budget exhausted; interval may be wide";
    if (cfg.cert && e.certificate) write_certificate(*cfg.cert, *e.certificate, s);
    emit(cfg, versioned("jsr", body));
    return 0;
  }

  const auto x = resolve_space(cfg);
  std::vector<GroupDistribution> qs;
  for (const auto& d : resolve_dists(cfg, x.n())) qs.push_back(d.group());
  const FourierJsr f = fourier_jsr(qs, x, opts);
  Json body = to_json(f);
  Json names = Json::array();
  for (const auto& d : cfg.dist) names.push_back(d);
  body["distributions"] = names;
  if (f.budget_exhausted) body["warning"] = "budget exhausted; interval may be wide";

  // the certificate of the irrep attaining the overall upper bound
  const IrrepJsr* top = nullptr;
  for (const auto& row : f.irreps) {
    if (!top || row.estimate.upper > top->estimate.upper) top = &row;
  }
  if (cfg.cert && top && top->estimate.certificate) {
    write_certificate(*cfg.cert, *top->estimate.certificate, top->matrices);
  }
  if (cfg.cert_prefix) {
    for (const auto& row : f.irreps) {
      if (!row.estimate.certificate) continue;
      write_certificate(*cfg.cert_prefix + row.shape.to_string() + ".cert.json",
                        *row.estimate.certificate, row.matrices);
    }
  }
  emit(cfg, versioned("fourier_jsr", body));
  return 0;
}

int cmd_verify_cert(RunConfig& cfg, const std::string& cert_path) {
  apply_config(cfg, {"matrices", "tol", "out"});
  if (!cfg.matrices) throw UsageError("verify-cert needs --matrices");
  const NormCertificate c = certificate_from_json(check_version(read_json_file(cert_path)));
  const MatrixSet s = matrix_set_from_json(check_version(read_json_file(*cfg.matrices)));
  const CertificateCheck chk =
      cfg.tol ? verify_certificate(s, c, *cfg.tol) : verify_certificate(s, c);
  emit(cfg, versioned("certificate_check", to_json(chk)));
  std::cerr << (chk.passed ? "PASS" : "FAIL") << ": " << chk.message << '\n';
  return chk.passed ? 0 : kExitFailedCheck;
}

// --- simulate and estimate ---------------------------------------------

int cmd_simulate(RunConfig& cfg) {
  apply_config(cfg, {"space", "tabloids", "tours", "n", "dist", "class-cycle", "N", "M", "seed",
                     "start", "out"});
  const auto x = resolve_space(cfg);
  const auto spec = single_dist(cfg, x.n());
  const int N = require_N(cfg);
  if (!cfg.M || *cfg.M == 0) throw UsageError("--M (number of replicas) is required");
  const std::uint64_t seed = cfg.seed.value_or(0);
  const State x0 = start_state(cfg, x);
  const EmpiricalDistribution emp = simulate_walk(spec.sampler(), x, x0, N, seed, *cfg.M);
  Json body = to_json(emp);
  body["distribution"] = spec.text;
  body["start"] = x0;
  if (x.size() <= BigInt(kDefaultSpaceCap)) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(x.checked_size()));
    for (const auto& [s, c] : emp.counts) {
      p(static_cast<Eigen::Index>(x.rank(s))) = static_cast<double>(c) / static_cast<double>(emp.M);
    }
    body["tv_to_uniform"] = tv_to_uniform(p);
    if (spec.is_class() || spec.explicit_form) {
      const auto exact = exact_walk_distribution(spec.group(), x, x.rank(x0), N);
      body["tv_to_exact"] = 0.5 * (p - exact.probs).cwiseAbs().sum();
    }
  }
  emit(cfg, versioned("simulation", body));
  return 0;
}

// TV bound valid from every start: the class bound when available, else the
// exact worst start on an enumerable space.
double tv_bound_for(const RunConfig& cfg, const DistributionSpec& spec,
                    const HomogeneousSpace& x, int N) {
  if (cfg.tv_bound) return *cfg.tv_bound;
  if (spec.is_class()) return std::min(1.0, std::sqrt(class_function_bound(*spec.by_class, x, N)));
  const auto per = per_state_tv(spec.group(), x, N);
  return per.tv[per.argmax];
}

// Least N whose TV bound falls below target, or -1.
long minimal_steps(const DistributionSpec& spec, const HomogeneousSpace& x, double target) {
  if (spec.is_class()) return required_steps(*spec.by_class, x, target);
  const auto g = spec.group();
  for (int N = 0; N <= 2000; ++N) {
    const auto per = per_state_tv(g, x, N);
    if (per.tv[per.argmax] < target) return N;
  }
  return -1;
}

[[noreturn]] void infeasible(const std::string& what, double tv, double level, long n_min) {
  std::ostringstream os;
  os << "plan infeasible: " << what << " tv bound " << fmt_double(tv) << " is not below "
     << fmt_double(level) << "; ";
  if (n_min >= 0) {
    os << "minimal feasible N is " << n_min;
  } else {
    os << "no feasible N found";
  }
  throw PlanInfeasible(os.str());
}

int cmd_estimate(RunConfig& cfg) {
  apply_config(cfg, {"space", "tabloids", "tours", "n", "dist", "class-cycle", "N", "M", "seed",
                     "start", "out", "eps", "eta", "tv-bound", "indicator", "matrix", "beta"});
  const double eps = cfg.eps.value_or(0.1);
  const double eta = cfg.eta.value_or(0.05);
  const std::uint64_t seed = cfg.seed.value_or(0);
  const int N = require_N(cfg);

  if (cfg.matrix) {
    const TourInstance inst = load_tour_csv(*cfg.matrix);
    if (!cfg.space && !cfg.tabloids && !cfg.tours) cfg.tours = inst.n;
    const auto x = resolve_space(cfg);
    if (x.kind() != HomogeneousSpace::Kind::Tours || x.n() != inst.n) {
      throw UsageError("--matrix needs the tours space on the same number of cities");
    }
    const double beta = cfg.beta.value_or(0.0);
    const auto spec = single_dist(cfg, x.n());
    const double tv = tv_bound_for(cfg, spec, x, N);
    const double delta = annealing_delta(inst, beta, eps);
    if (tv >= delta) infeasible("annealing", tv, delta, minimal_steps(spec, x, delta));
    const AnnealingEstimate e =
        annealing_length_estimate(inst, beta, spec.sampler(), N, tv, eps, eta, cfg.M.value_or(0), seed);
    Json body = to_json(e);
    body["beta"] = beta;
    body["D"] = inst.D;
    body["distribution"] = spec.text;
    emit(cfg, versioned("annealing_estimate", body));
    return 0;
  }

  const auto x = resolve_space(cfg);
  const auto spec = single_dist(cfg, x.n());
  const double tv = tv_bound_for(cfg, spec, x, N);
  if (tv >= eps) infeasible("estimate", tv, eps, minimal_steps(spec, x, eps));
  EstimationPlan plan = make_plan(eps, eta, tv, N);
  if (cfg.M) plan.M = *cfg.M;
  const std::uint64_t target = cfg.indicator.value_or(0);
  if (BigInt(target) >= x.size()) throw UsageError("--indicator is outside the space");
  const State hit = x.unrank(target);
  const auto f = [&](const State& s) { return s == hit ? 1.0 : 0.0; };
  const MeanEstimate e = estimate_uniform_mean(f, 1.0, spec.sampler(), x, start_state(cfg, x),
                                               plan, seed);
  Json body = to_json(e);
  body["function"] = "indicator:" + std::to_string(target);
  body["space"] = x.id();
  body["distribution"] = spec.text;
  emit(cfg, versioned("mean_estimate", body));
  return 0;
}

// --- fourier and chars -------------------------------------------------

int cmd_fourier(RunConfig& cfg) {
  apply_config(cfg, {"space", "tabloids", "tours", "n", "dist", "class-cycle", "shape", "dim-cap",
                     "out"});
  int n = 0;
  if (cfg.space || cfg.tabloids || cfg.tours) {
    n = resolve_space(cfg).n();
  } else if (cfg.n) {
    n = *cfg.n;
  } else {
    throw UsageError("fourier needs --n or a space");
  }
  const auto spec = single_dist(cfg, n);
  const std::size_t cap = cfg.dim_cap.value_or(64);
  std::vector<Partition> shapes;
  if (cfg.shape) {
    shapes.push_back(parse_partition(*cfg.shape));
    if (shapes.back().n() != n) throw UsageError("--shape is not a partition of n");
  } else {
    shapes = partitions_of(n);
  }
  std::optional<GroupDistribution> g;
  Json rows = Json::array();
  for (const auto& lambda : shapes) {
    Json row{{"shape", lambda.to_string()}, {"dim", to_string(dim_irrep(lambda))}};
    if (spec.is_class()) {
      row["route"] = "class";
      row["scalar"] = class_scalar(*spec.by_class, lambda);
    } else if (dim_irrep(lambda) > BigInt(cap)) {
      row["route"] = "skipped";
    } else {
      if (!g) g = spec.group();
      const auto f = fourier_transform(*g, Irrep(lambda, cap));
      row["route"] = "matrix";
      row["matrix"] = matrix_to_json(f.entries);
      row["spectral_radius"] = spectral_radius(f.entries);
      row["spectral_norm"] = spectral_norm(f.entries);
    }
    rows.push_back(row);
  }
  emit(cfg, versioned("fourier", Json{{"n", n}, {"distribution", spec.text}, {"transforms", rows}}));
  return 0;
}

int cmd_chars(RunConfig& cfg) {
  apply_config(cfg, {"n", "out", "csv"});
  if (!cfg.n) throw UsageError("chars needs --n");
  const CharacterTable t = character_table(*cfg.n);
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    classes.push_back(Json{{"type", c.to_string()}, {"size", to_string(conjugacy_class_size(c))}});
  }
  Json shapes = Json::array();
  Json values = Json::array();
  for (std::size_t i = 0; i < t.shapes.size(); ++i) {
    shapes.push_back(t.shapes[i].to_string());
    Json row = Json::array();
    for (const auto& v : t.values[i]) row.push_back(to_string(v));
    values.push_back(row);
  }
  if (cfg.csv) {
    std::ostringstream os;
    os << "shape";
    for (const auto& c : t.classes) os << ',' << c.to_string();
    os << '\n';
    for (std::size_t i = 0; i < t.shapes.size(); ++i) {
      os << t.shapes[i].to_string();
      for (const auto& v : t.values[i]) os << ',' << to_string(v);
      os << '\n';
    }
    write_text_file(*cfg.csv, os.str());
  }
  emit(cfg, versioned("character_table",
                      Json{{"n", t.n}, {"classes", classes}, {"shapes", shapes}, {"values", values}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symwalk: mixing bounds, joint spectral radii and walk simulation on S_n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "symwalk 0.3.0");
  RunConfig cfg;

  auto* bounds = app.add_subcommand("bounds", "average and worst-start TV bounds for a walk");
  add_space_options(bounds, cfg);
  add_common(bounds, cfg);
  bounds->add_option("--dist", cfg.dist, "distribution spec")->take_last();
  bounds->add_option("--class-cycle", cfg.class_cycle, "uniform distribution on k-cycles");
  bounds->add_option("--N", cfg.N, "number of steps");
  bounds->add_option("--sweep-N", cfg.sweep_N, "a:b, emit an N,bound CSV");
  bounds->add_option("--csv", cfg.csv, "CSV output path");
  bounds->add_flag("--exhaustive-check", cfg.exhaustive_check,
                   "add the exhaustive average squared TV");

  auto* jsr = app.add_subcommand("jsr", "Fourier joint spectral radius with certificates");
  add_space_options(jsr, cfg);
  add_common(jsr, cfg);
  jsr->add_option("--dist", cfg.dist, "distribution specs (repeat for switched walks)");
  jsr->add_option("--class-cycle", cfg.class_cycle, "uniform distribution on k-cycles");
  jsr->add_option("--matrices", cfg.matrices, "estimate a raw matrix set instead");
  jsr->add_option("--cert", cfg.cert, "write the binding certificate (*.cert.json)");
  jsr->add_option("--cert-prefix", cfg.cert_prefix, "write one certificate per irrep");
  jsr->add_option("--degrees", cfg.degrees, "half-degrees d of the degree-2d forms tried");
  jsr->add_option("--depth", cfg.depth, "product search depth");
  jsr->add_option("--tol", cfg.tol, "target interval width");
  jsr->add_option("--budget", cfg.budget, "matrix multiplication budget");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify-cert", "re-check a norm certificate");
  add_common(verify, cfg);
  verify->add_option("cert", cert_path, "certificate JSON")->required();
  verify->add_option("--matrices", cfg.matrices, "matrix set JSON");
  verify->add_option("--tol", cfg.tol, "accepted relative negative slack");

  auto* simulate = app.add_subcommand("simulate", "empirical endpoint distribution");
  add_space_options(simulate, cfg);
  add_common(simulate, cfg);
  simulate->add_option("--dist", cfg.dist, "distribution spec")->take_last();
  simulate->add_option("--class-cycle", cfg.class_cycle, "uniform distribution on k-cycles");
  simulate->add_option("--N", cfg.N, "number of steps");
  simulate->add_option("--M", cfg.M, "number of replicas");
  simulate->add_option("--seed", cfg.seed, "seed");
  simulate->add_option("--start", cfg.start, "index of the initial state");

  auto* estimate = app.add_subcommand("estimate", "walk-based Monte Carlo estimates");
  add_space_options(estimate, cfg);
  add_common(estimate, cfg);
  estimate->add_option("--dist", cfg.dist, "distribution spec")->take_last();
  estimate->add_option("--class-cycle", cfg.class_cycle, "uniform distribution on k-cycles");
  estimate->add_option("--N", cfg.N, "steps per replica");
  estimate->add_option("--M", cfg.M, "replicas (default: Hoeffding sample size)");
  estimate->add_option("--seed", cfg.seed, "seed");
  estimate->add_option("--start", cfg.start, "index of the initial state");
  estimate->add_option("--eps", cfg.eps, "accuracy (default 0.1)");
  estimate->add_option("--eta", cfg.eta, "failure probability (default 0.05)");
  estimate->add_option("--tv-bound", cfg.tv_bound, "override the TV bound after N steps");
  estimate->add_option("--indicator", cfg.indicator, "estimate the mean of this state's indicator");
  estimate->add_option("--matrix", cfg.matrix, "tour distance matrix CSV (annealing estimate)");
  estimate->add_option("--beta", cfg.beta, "inverse temperature (default 0)");

  auto* fourier = app.add_subcommand("fourier", "dump Fourier transforms");
  add_space_options(fourier, cfg);
  add_common(fourier, cfg);
  fourier->add_option("--dist", cfg.dist, "distribution spec")->take_last();
  fourier->add_option("--class-cycle", cfg.class_cycle, "uniform distribution on k-cycles");
  fourier->add_option("--shape", cfg.shape, "only this irreducible");
  fourier->add_option("--dim-cap", cfg.dim_cap, "largest dimension materialized (default 64)");

  auto* chars = app.add_subcommand("chars", "character table of S_n");
  add_common(chars, cfg);
  chars->add_option("--n", cfg.n, "degree");
  chars->add_option("--csv", cfg.csv, "also write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (*bounds) return cmd_bounds(cfg);
    if (*jsr) return cmd_jsr(cfg);
    if (*verify) return cmd_verify_cert(cfg, cert_path);
    if (*simulate) return cmd_simulate(cfg);
    if (*estimate) return cmd_estimate(cfg);
    if (*fourier) return cmd_fourier(cfg);
    if (*chars) return cmd_chars(cfg);
  } catch (const UsageError& e) {
    std::cerr << "symwalk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PlanInfeasible& e) {
    std::cerr << "symwalk: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    std::cerr << "symwalk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "symwalk: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
