#pragma once

// Walk-based Monte Carlo estimates of uniform averages with Hoeffding-type
// guarantees, and the annealing estimator for average tour lengths.

#include "symwalk/distribution.hpp"
#include "symwalk/space.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>

namespace symwalk {

/// Least M with 2 exp(-M (eps - tv)^2 / 2) <= eta. Throws PlanInfeasible
/// when tv >= eps and DomainError for eta outside (0, 1).
std::uint64_t hoeffding_sample_size(double epsilon, double eta, double tv_bound);

struct EstimationPlan {
  double epsilon = 0.0;
  double eta = 0.0;
  double tv_bound = 0.0;
  int N = 0;
  std::uint64_t M = 0;
};

/// Fills M from the other fields.
EstimationPlan make_plan(double epsilon, double eta, double tv_bound, int N);

/// 1 - 2 exp(-M (eps - tv)^2 / 2).
double plan_confidence(const EstimationPlan& plan);

struct MeanEstimate {
  double estimate = 0.0;
  double radius = 0.0;      // epsilon times the declared bound
  double confidence = 0.0;
  double declared_bound = 1.0;
  EstimationPlan plan;
  std::uint64_t seed = 0;
};

/// Mean of f over M endpoints of independent N-step walks from x0. f is
/// divided by its declared sup bound so the range condition |f| <= 1 holds;
/// the estimate and radius are reported in the original units.
MeanEstimate estimate_uniform_mean(const std::function<double(const State&)>& f,
                                   double declared_bound, const PermutationSampler& q,
                                   const HomogeneousSpace& x, const State& x0,
                                   const EstimationPlan& plan, std::uint64_t seed,
                                   unsigned threads = 0);

/// Smallest N <= max_N with sqrt(class_function_bound(q, x, N)) < target_tv,
/// or -1 when none exists.
long required_steps(const ClassDistribution& q, const HomogeneousSpace& x, double target_tv,
                    long max_N = 1'000'000);

// --- tours ---------------------------------------------------------------

struct TourInstance {
  int n = 0;
  Eigen::MatrixXd dist;
  double D = 0.0;  // sum of the n largest pairwise distances

  /// Validates symmetry, zero diagonal and nonnegativity.
  static TourInstance from_matrix(const Eigen::MatrixXd& dist);
  double length(const State& tour) const;
};

/// Distance matrix from CSV (comma or whitespace separated, one row per line).
TourInstance load_tour_csv(const std::string& path);
TourInstance parse_tour_csv(const std::string& text);

/// sum_x l(x) e^{-beta l(x)} / sum_x e^{-beta l(x)} over all (n-1)! tours.
double exact_gibbs_average(const TourInstance& inst, double beta,
                           std::size_t cap = kDefaultSpaceCap);

struct AnnealingEstimate {
  double lbar_hat = 0.0;
  double radius = 0.0;  // 2 epsilon
  double a_hat = 0.0;
  double c_hat = 0.0;
  double delta = 0.0;   // epsilon e^{-2 beta D} / D^2, the TV level required
  double tv_bound = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
  double confidence = 0.0;
  int N = 0;
  std::uint64_t M = 0;
  std::uint64_t seed = 0;
};

/// delta = epsilon e^{-2 beta D} / D^2.
double annealing_delta(const TourInstance& inst, double beta, double epsilon);

/// Ratio estimator A_hat / C_hat with a_beta(x) = l(x) e^{-beta l(x)} and
/// c_beta(x) = e^{-beta l(x)}. Requires tv_bound < delta (PlanInfeasible
/// otherwise); M = 0 picks the least M with 2 exp(-M (delta - tv)^2 / 2) <= eta.
/// The reported confidence is 1 - 4 exp(-M (delta - tv)^2 / 2), which is at
/// least 1 - 2 eta for the automatic M.
AnnealingEstimate annealing_length_estimate(const TourInstance& inst, double beta,
                                            const PermutationSampler& q, int N,
                                            double tv_bound, double epsilon, double eta,
                                            std::uint64_t M, std::uint64_t seed,
                                            unsigned threads = 0);

struct TourMultiplicity {
  BigInt multiplicity;
  BigInt dim;
  double ratio = 0.0;  // multiplicity / dim
};

/// m(S^lambda, C X) for tours through a prime number n of cities, by
/// Frobenius reciprocity over the cyclic rotation group.
TourMultiplicity tours_multiplicity_ratio(int n, const Partition& lambda);

bool is_prime(int n);

}  // namespace symwalk
