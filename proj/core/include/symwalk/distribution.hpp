#pragma once

// Probability distributions on S_n. GroupDistribution stores an explicit
// sparse support; ClassDistribution stores the mass of each conjugacy class
// and stands for the distribution that is uniform inside every class, which
// keeps class walks on large n (e.g. n = 52) cheap.

#include "symwalk/group.hpp"
#include "symwalk/rng.hpp"

#include <map>
#include <vector>

namespace symwalk {

inline constexpr double kProbabilityTolerance = 1e-12;

class ClassDistribution;

class GroupDistribution {
 public:
  GroupDistribution() = default;
  /// Weights must be nonnegative and sum to 1 within `tol`. Zero weights are
  /// dropped from the support.
  GroupDistribution(int n, std::map<Permutation, double> weights,
                    double tol = kProbabilityTolerance);

  static GroupDistribution point_mass(const Permutation& g);
  /// Uniform on S_n; materializes n! elements (n <= 8).
  static GroupDistribution uniform(int n);

  int n() const { return n_; }
  const std::map<Permutation, double>& weights() const { return weights_; }
  std::size_t support_size() const { return weights_.size(); }
  double weight(const Permutation& g) const;

  /// Q(g) = Q(h g h^{-1}) for all g, h, checked within tol.
  bool is_class_invariant(double tol = 1e-12) const;
  /// Q(g) = Q(g^{-1}) within tol.
  bool is_symmetric(double tol = 1e-12) const;

  /// Total mass per conjugacy class.
  std::map<CycleType, double> class_masses() const;

  /// Throws NotClassInvariant when the weights vary inside a class.
  ClassDistribution to_class_distribution(double tol = 1e-12) const;

 private:
  int n_ = 0;
  std::map<Permutation, double> weights_;
};

class ClassDistribution {
 public:
  ClassDistribution() = default;
  /// masses[c] = total probability of class c; must sum to 1.
  ClassDistribution(int n, std::map<CycleType, double> masses,
                    double tol = kProbabilityTolerance);

  static ClassDistribution uniform_class(const CycleType& c);
  /// Q(id) = 1/n, Q(tau) = 2/n^2 for every transposition tau.
  static ClassDistribution lazy_transposition(int n);
  /// Uniform on S_n (class mass = class size / n!).
  static ClassDistribution uniform(int n);

  int n() const { return n_; }
  const std::map<CycleType, double>& masses() const { return masses_; }

  /// Explicit weights on every class element; throws CapExceeded when the
  /// support would exceed max_support elements.
  GroupDistribution materialize(std::size_t max_support = 1'000'000) const;

 private:
  int n_ = 0;
  std::map<CycleType, double> masses_;
};

/// (P * Q)(h) = sum_g P(h g^{-1}) Q(g): sample g from Q, then apply an
/// element of P on the left.
GroupDistribution convolve(const GroupDistribution& p, const GroupDistribution& q);

/// Q^{*N}; N = 0 gives the point mass at the identity.
GroupDistribution convolution_power(const GroupDistribution& q, int N);

/// Draws group elements from a distribution by inverse CDF over the sorted
/// support (explicit distributions) or over classes followed by a uniform
/// conjugation (class distributions).
class PermutationSampler {
 public:
  explicit PermutationSampler(const GroupDistribution& q);
  explicit PermutationSampler(const ClassDistribution& q);

  int n() const { return n_; }
  Permutation sample(RandomStream& rng) const;

 private:
  int n_ = 0;
  bool by_class_ = false;
  std::vector<Permutation> atoms_;  // support elements or class representatives
  std::vector<double> cdf_;
};

/// Uniform random element of S_n (Fisher-Yates).
Permutation random_permutation(int n, RandomStream& rng);

}  // namespace symwalk
