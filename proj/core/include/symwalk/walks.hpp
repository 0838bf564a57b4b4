#pragma once

// Random walks on homogeneous spaces: exact distributions, total variation,
// mixing bounds, switched walks and simulation.
//
// Step convention: after steps g_1, ..., g_N the state is g_N ... g_1 x_0.
// For a switched walk with word w, step i draws from Q_{w_i}; w_1 is applied
// first. Words are 0-based letter indices into the distribution list.

#include "symwalk/bigint.hpp"
#include "symwalk/distribution.hpp"
#include "symwalk/space.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symwalk {

inline constexpr std::uint64_t kDefaultWordBudget = 65'536;

/// T(y, x) = sum_{g : g x = y} Q(g). Column-stochastic; doubly stochastic
/// on homogeneous spaces.
Eigen::SparseMatrix<double> action_matrix(const GroupDistribution& q,
                                          const HomogeneousSpace& x,
                                          std::size_t cap = kDefaultSpaceCap);

struct StateDistribution {
  std::string space_id;
  Eigen::VectorXd probs;
};

StateDistribution point_state(const HomogeneousSpace& x, std::uint64_t x0,
                              std::size_t cap = kDefaultSpaceCap);
StateDistribution uniform_state(const HomogeneousSpace& x,
                                std::size_t cap = kDefaultSpaceCap);

/// q^N e_{x0} by repeated application of the action matrix.
StateDistribution exact_walk_distribution(const GroupDistribution& q,
                                          const HomogeneousSpace& x,
                                          std::uint64_t x0, int N,
                                          std::size_t cap = kDefaultSpaceCap);

/// Same distribution through the N-fold convolution power pushed onto X.
StateDistribution exact_walk_distribution_by_convolution(
    const GroupDistribution& q, const HomogeneousSpace& x, std::uint64_t x0, int N,
    std::size_t cap = kDefaultSpaceCap);

/// Half the l1 distance. Throws DomainError on a space mismatch.
double tv_distance(const StateDistribution& p, const StateDistribution& q);
/// TV distance of a probability vector to the uniform vector.
double tv_to_uniform(const Eigen::VectorXd& p);

// --- average bounds ------------------------------------------------------

struct BoundRow {
  Partition shape;
  BigInt multiplicity;
  BigInt dim;
  double term = 0.0;  // m * ||Q^(rho)^N||_F^2
};

struct BoundReport {
  std::string space_id;
  BigInt space_size;
  int N = 0;
  std::string route;  // "matrix" or "class"
  std::vector<BoundRow> rows;
  double upper_avg = 0.0;
  double lower_avg = 0.0;
  std::optional<double> exhaustive_avg_tv_sq;
};

/// Both sides of the averaged bound
///   lower_avg = upper_avg / |X|  <=  avg_x TV(q^N e_x, u)^2  <=  upper_avg,
///   upper_avg = (1/4) sum_{lambda != (n)} m_lambda ||Q^(rho_lambda)^N||_F^2.
/// Class-invariant input uses the scalar route; otherwise the transforms are
/// materialized up to dim_cap.
BoundReport average_tv_sandwich(const GroupDistribution& q, const HomogeneousSpace& x,
                                int N, std::size_t dim_cap = 1024);
BoundReport average_tv_sandwich(const ClassDistribution& q, const HomogeneousSpace& x,
                                int N);

/// Average over all starting points of the squared TV distance after N steps.
double exhaustive_average_tv_sq(const GroupDistribution& q, const HomogeneousSpace& x,
                                int N, std::size_t cap = kDefaultSpaceCap);

struct PerStateTv {
  std::vector<double> tv;
  std::size_t argmin = 0;
  std::size_t argmax = 0;
};

PerStateTv per_state_tv(const GroupDistribution& q, const HomogeneousSpace& x, int N,
                        std::size_t cap = kDefaultSpaceCap);

/// Whether ||q^N e_x - u||_2 is the same for every start x. When it is,
/// upper_avg bounds the squared TV from every start, not just on average.
/// The group itself and class-invariant q pass without enumeration; other
/// inputs are checked exhaustively (throws CapExceeded above cap).
struct StartIndependence {
  bool holds = false;
  std::string reason;  // "group", "class_invariant", "exhaustive", "norms_differ"
  double max_spread = 0.0;  // max - min of the norms when enumerated
};

StartIndependence start_independent_norm(const GroupDistribution& q,
                                         const HomogeneousSpace& x, int N,
                                         double tol = 1e-12,
                                         std::size_t cap = kDefaultSpaceCap);

/// Markov bound on |{x : TV(q^N e_x, u) >= alpha}|:  |X| upper_avg / alpha^2.
double bad_state_fraction_bound(const GroupDistribution& q, const HomogeneousSpace& x,
                                int N, double alpha);
double bad_state_fraction_bound(const BoundReport& report, double alpha);

std::size_t count_bad_states(const GroupDistribution& q, const HomogeneousSpace& x,
                             int N, double alpha, std::size_t cap = kDefaultSpaceCap);

// --- class-function bounds -----------------------------------------------

/// Squared-TV bound valid from every starting point:
///   (1/4) sum_{lambda != (n)} m_lambda dim_lambda r_lambda^{2N}.
/// log_ variants return the natural log (-inf when the bound is 0).
double class_function_log_bound(const ClassDistribution& q, const HomogeneousSpace& x,
                                int N);
double class_function_bound(const ClassDistribution& q, const HomogeneousSpace& x, int N);
double class_function_bound(const ClassDistribution& q, const Partition& mu, int N);
/// Throws NotClassInvariant unless q is constant on classes.
double class_function_bound(const GroupDistribution& q, const HomogeneousSpace& x, int N);

/// k-cycle walk on two-row tabloids (a, b):
///   (1/4) sum_{t=1}^{b} chi_t^{2N} / dim_t^{2N-1}.
double tabloid_cycle_log_bound(int n, int a, int b, int k, int N);
double tabloid_cycle_bound(int n, int a, int b, int k, int N);

// --- switched walks ------------------------------------------------------

StateDistribution switched_exact_distribution(const std::vector<GroupDistribution>& qs,
                                              const std::vector<int>& word,
                                              const HomogeneousSpace& x,
                                              std::uint64_t x0,
                                              std::size_t cap = kDefaultSpaceCap);

struct SwitchedWorstCase {
  double max_tv = 0.0;
  std::vector<int> word;
  std::uint64_t state = 0;
  std::uint64_t words = 0;
};

/// Exhaustive max over words of length N and starting points. Throws
/// BudgetExceeded when m^N > word_budget.
SwitchedWorstCase switched_worst_case_tv(const std::vector<GroupDistribution>& qs,
                                         const HomogeneousSpace& x, int N,
                                         std::uint64_t word_budget = kDefaultWordBudget,
                                         std::size_t cap = kDefaultSpaceCap);

/// (1/4) sum_{lambda != (n)} m_lambda dim_lambda prod_i r_{lambda, w_i}^2.
double switched_class_bound(const std::vector<ClassDistribution>& qs,
                            const std::vector<int>& word, const HomogeneousSpace& x);
double switched_class_bound(const std::vector<GroupDistribution>& qs,
                            const std::vector<int>& word, const HomogeneousSpace& x);

// --- simulation ----------------------------------------------------------

struct EmpiricalDistribution {
  std::string space_id;
  int N = 0;
  std::uint64_t M = 0;
  std::uint64_t seed = 0;
  std::map<State, std::uint64_t> counts;

  /// Dense frequencies indexed like the space.
  StateDistribution to_state_distribution(const HomogeneousSpace& x,
                                          std::size_t cap = kDefaultSpaceCap) const;
};

/// M independent N-step trajectories from x0. Replica r draws from the
/// stream (seed, r), so the result depends only on (seed, M, N) and not on
/// the thread count. threads = 0 reads SYMWALK_THREADS.
EmpiricalDistribution simulate_walk(const PermutationSampler& q,
                                    const HomogeneousSpace& x, const State& x0, int N,
                                    std::uint64_t seed, std::uint64_t M,
                                    unsigned threads = 0);

/// End state of one trajectory.
State walk_endpoint(const PermutationSampler& q, const HomogeneousSpace& x,
                    const State& x0, int N, RandomStream& rng);

/// Worker count from SYMWALK_THREADS, else the hardware concurrency.
unsigned worker_threads();

}  // namespace symwalk
