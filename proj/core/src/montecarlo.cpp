#include "symwalk/montecarlo.hpp"

#include "symwalk/errors.hpp"
#include "symwalk/symrep.hpp"
#include "symwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace symwalk {

std::uint64_t hoeffding_sample_size(double epsilon, double eta, double tv_bound) {
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must lie in (0, 1)");
  if (!(tv_bound >= 0.0)) throw DomainError("tv_bound must be nonnegative");
  const double margin = epsilon - tv_bound;
  if (!(margin > 0.0)) {
    throw PlanInfeasible("total variation bound " + std::to_string(tv_bound) +
                         " is not below epsilon " + std::to_string(epsilon));
  }
  const double target = std::log(2.0 / eta);
  auto ok = [&](double m) { return m * margin * margin / 2.0 >= target; };
  double m = std::ceil(2.0 * target / (margin * margin));
  // correct the closed form for rounding in either direction
  while (m > 1.0 && ok(m - 1.0)) m -= 1.0;
  while (!ok(m)) m += 1.0;
  if (m > 1e18) throw PlanInfeasible("required sample count overflows");
  return static_cast<std::uint64_t>(m);
}

EstimationPlan make_plan(double epsilon, double eta, double tv_bound, int N) {
  if (N < 0) throw DomainError("negative step count");
  EstimationPlan p{epsilon, eta, tv_bound, N, 0};
  p.M = hoeffding_sample_size(epsilon, eta, tv_bound);
  return p;
}

double plan_confidence(const EstimationPlan& plan) {
  const double margin = plan.epsilon - plan.tv_bound;
  if (!(margin > 0.0)) return 0.0;
  return 1.0 - 2.0 * std::exp(-static_cast<double>(plan.M) * margin * margin / 2.0);
}

namespace {

// Fills values[r] = g(endpoint of replica r); replica r uses stream (seed, r).
template <typename Fn>
std::vector<double> sample_endpoints(const PermutationSampler& q, const HomogeneousSpace& x,
                                     const State& x0, int N, std::uint64_t M,
                                     std::uint64_t seed, unsigned threads, Fn&& g) {
  std::vector<double> values(M);
  if (threads == 0) threads = worker_threads();
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, M)));
  auto work = [&](unsigned t) {
    for (std::uint64_t r = M * t / threads; r < M * (t + 1) / threads; ++r) {
      RandomStream rng(seed, r);
      values[r] = g(walk_endpoint(q, x, x0, N, rng));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return values;
}

// Neumaier-compensated sum in replica order.
double compensated_mean(const std::vector<double>& v) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : v) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return (sum + comp) / static_cast<double>(v.size());
}

}  // namespace

MeanEstimate estimate_uniform_mean(const std::function<double(const State&)>& f,
                                   double declared_bound, const PermutationSampler& q,
                                   const HomogeneousSpace& x, const State& x0,
                                   const EstimationPlan& plan, std::uint64_t seed,
                                   unsigned threads) {
  if (!(declared_bound > 0.0)) throw DomainError("declared bound must be positive");
  if (!(plan.tv_bound < plan.epsilon)) {
    throw PlanInfeasible("plan has tv_bound >= epsilon");
  }
  if (plan.M == 0) throw PlanInfeasible("plan has no samples");
  const auto values = sample_endpoints(q, x, x0, plan.N, plan.M, seed, threads,
                                       [&](const State& s) {
                                         const double v = f(s) / declared_bound;
                                         if (std::abs(v) > 1.0 + 1e-12) {
                                           throw DomainError("function exceeds its declared bound");
                                         }
                                         return v;
                                       });
  MeanEstimate e;
  e.estimate = compensated_mean(values) * declared_bound;
  e.radius = plan.epsilon * declared_bound;
  e.confidence = plan_confidence(plan);
  e.declared_bound = declared_bound;
  e.plan = plan;
  e.seed = seed;
  return e;
}

long required_steps(const ClassDistribution& q, const HomogeneousSpace& x, double target_tv,
                    long max_N) {
  if (!(target_tv > 0.0)) return -1;
  const double log_target = 2.0 * std::log(target_tv);
  auto good = [&](long n) {
    return class_function_log_bound(q, x, static_cast<int>(n)) < log_target;
  };
  // the bound is nonincreasing in N: double, then bisect
  long hi = 1;
  while (!good(hi)) {
    if (hi >= max_N) return -1;
    hi = std::min(max_N, hi * 2);
  }
  long lo = 0;  // N = 0 never mixes a nontrivial space
  if (good(0)) return 0;
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (good(mid) ? hi : lo) = mid;
  }
  return hi;
}

// --- tours ---------------------------------------------------------------

TourInstance TourInstance::from_matrix(const Eigen::MatrixXd& dist) {
  if (dist.rows() != dist.cols() || dist.rows() < 3) {
    throw DomainError("distance matrix must be square with at least 3 cities");
  }
  const auto n = dist.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (dist(i, i) != 0.0) throw DomainError("distance matrix needs a zero diagonal");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(dist(i, j) >= 0.0) || !std::isfinite(dist(i, j))) {
        throw DomainError("distances must be finite and nonnegative");
      }
      if (std::abs(dist(i, j) - dist(j, i)) > 1e-12 * (1.0 + std::abs(dist(i, j)))) {
        throw DomainError("distance matrix must be symmetric");
      }
    }
  }
  TourInstance t;
  t.n = static_cast<int>(n);
  t.dist = dist;
  std::vector<double> pairs;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) pairs.push_back(dist(i, j));
  }
  std::sort(pairs.begin(), pairs.end(), std::greater<>());
  for (Eigen::Index i = 0; i < n; ++i) t.D += pairs[static_cast<std::size_t>(i)];
  return t;
}

double TourInstance::length(const State& tour) const {
  double l = 0.0;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    l += dist(tour[i], tour[(i + 1) % tour.size()]);
  }
  return l;
}

TourInstance parse_tour_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw DomainError("distance CSV: bad number '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw DomainError("distance CSV must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return TourInstance::from_matrix(d);
}

TourInstance load_tour_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open distance file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tour_csv(ss.str());
}

double exact_gibbs_average(const TourInstance& inst, double beta, std::size_t cap) {
  const auto tours = HomogeneousSpace::tours(inst.n).enumerate(cap);
  std::vector<double> lengths;
  double lmin = std::numeric_limits<double>::infinity();
  for (const auto& t : tours) {
    lengths.push_back(inst.length(t));
    lmin = std::min(lmin, lengths.back());
  }
  double num = 0.0;
  double den = 0.0;
  for (double l : lengths) {
    const double w = std::exp(-beta * (l - lmin));
    num += l * w;
    den += w;
  }
  return num / den;
}

double annealing_delta(const TourInstance& inst, double beta, double epsilon) {
  return epsilon * std::exp(-2.0 * beta * inst.D) / (inst.D * inst.D);
}

AnnealingEstimate annealing_length_estimate(const TourInstance& inst, double beta,
                                            const PermutationSampler& q, int N,
                                            double tv_bound, double epsilon, double eta,
                                            std::uint64_t M, std::uint64_t seed,
                                            unsigned threads) {
  if (q.n() != inst.n) throw DomainError("annealing: distribution degree differs from n");
  if (!(beta >= 0.0)) throw DomainError("annealing: beta must be nonnegative");
  if (!(epsilon > 0.0)) throw DomainError("annealing: epsilon must be positive");
  AnnealingEstimate e;
  e.delta = annealing_delta(inst, beta, epsilon);
  e.tv_bound = tv_bound;
  e.epsilon = epsilon;
  e.eta = eta;
  e.N = N;
  e.seed = seed;
  if (!(tv_bound < e.delta)) {
    throw PlanInfeasible("annealing needs total variation below " + std::to_string(e.delta) +
                         " but the bound at N = " + std::to_string(N) + " is " +
                         std::to_string(tv_bound));
  }
  if (M == 0) M = hoeffding_sample_size(e.delta, eta, tv_bound);
  e.M = M;
  // each of A_hat, C_hat misses its delta-window with probability at most this
  const double margin = e.delta - tv_bound;
  const double miss = 2.0 * std::exp(-static_cast<double>(M) * margin * margin / 2.0);

  const auto x = HomogeneousSpace::tours(inst.n);
  const State x0 = x.base_point();
  // one pass stores l(x); both averages are formed from it
  const auto lengths = sample_endpoints(q, x, x0, N, M, seed, threads,
                                        [&](const State& s) { return inst.length(s); });
  std::vector<double> a(M);
  std::vector<double> c(M);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    c[i] = std::exp(-beta * lengths[i]);
    a[i] = lengths[i] * c[i];
  }
  e.a_hat = compensated_mean(a);
  e.c_hat = compensated_mean(c);
  e.lbar_hat = e.a_hat / e.c_hat;
  e.radius = 2.0 * epsilon;
  e.confidence = std::max(0.0, 1.0 - 2.0 * miss);
  return e;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TourMultiplicity tours_multiplicity_ratio(int n, const Partition& lambda) {
  if (!is_prime(n)) throw DomainError(std::to_string(n) + " is not prime");
  if (lambda.n() != n) throw DomainError("partition size differs from n");
  // stabilizer of the tour 0 -> 1 -> ... -> n-1: the rotations
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i;
  const Permutation c = Permutation::cycle(n, cyc);
  std::vector<Permutation> rotations{Permutation::identity(n)};
  for (int k = 1; k < n; ++k) rotations.push_back(compose(c, rotations.back()));
  TourMultiplicity out;
  out.multiplicity = frobenius_reciprocity_multiplicity(lambda, rotations);
  out.dim = dim_irrep(lambda);
  out.ratio = std::exp(log_abs(out.multiplicity) - log_abs(out.dim));
  if (out.multiplicity == 0) out.ratio = 0.0;
  return out;
}

}  // namespace symwalk
