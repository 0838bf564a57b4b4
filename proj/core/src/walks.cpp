#include "symwalk/walks.hpp"

#include "symwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symwalk {

Eigen::SparseMatrix<double> action_matrix(const GroupDistribution& q,
                                          const HomogeneousSpace& x, std::size_t cap) {
  if (q.n() != x.n()) throw DomainError("action_matrix: degree mismatch");
  const std::size_t m = x.checked_size(cap);
  const auto points = x.enumerate(cap);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(q.support_size() * m);
  for (const auto& [g, p] : q.weights()) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto j = x.rank(x.act(g, points[i]));
      trips.emplace_back(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i), p);
    }
  }
  Eigen::SparseMatrix<double> t(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  t.setFromTriplets(trips.begin(), trips.end());  // duplicates are summed
  return t;
}

StateDistribution point_state(const HomogeneousSpace& x, std::uint64_t x0,
                              std::size_t cap) {
  const std::size_t m = x.checked_size(cap);
  if (x0 >= m) throw DomainError("starting point index out of range");
  StateDistribution s{x.id(), Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m))};
  s.probs(static_cast<Eigen::Index>(x0)) = 1.0;
  return s;
}

StateDistribution uniform_state(const HomogeneousSpace& x, std::size_t cap) {
  const std::size_t m = x.checked_size(cap);
  return {x.id(), Eigen::VectorXd::Constant(static_cast<Eigen::Index>(m),
                                            1.0 / static_cast<double>(m))};
}

StateDistribution exact_walk_distribution(const GroupDistribution& q,
                                          const HomogeneousSpace& x, std::uint64_t x0,
                                          int N, std::size_t cap) {
  if (N < 0) throw DomainError("negative step count");
  StateDistribution s = point_state(x, x0, cap);
  if (N == 0) return s;
  const auto t = action_matrix(q, x, cap);
  for (int i = 0; i < N; ++i) s.probs = t * s.probs;
  return s;
}

StateDistribution exact_walk_distribution_by_convolution(const GroupDistribution& q,
                                                         const HomogeneousSpace& x,
                                                         std::uint64_t x0, int N,
                                                         std::size_t cap) {
  if (q.n() != x.n()) throw DomainError("degree mismatch");
  StateDistribution s = point_state(x, x0, cap);
  s.probs.setZero();
  const State start = x.unrank(x0);
  const GroupDistribution qn = convolution_power(q, N);
  for (const auto& [g, p] : qn.weights()) {
    s.probs(static_cast<Eigen::Index>(x.rank(x.act(g, start)))) += p;
  }
  return s;
}

double tv_distance(const StateDistribution& p, const StateDistribution& q) {
  if (p.space_id != q.space_id || p.probs.size() != q.probs.size()) {
    throw DomainError("tv_distance: distributions live on different spaces");
  }
  return 0.5 * (p.probs - q.probs).cwiseAbs().sum();
}

double tv_to_uniform(const Eigen::VectorXd& p) {
  const double u = 1.0 / static_cast<double>(p.size());
  return 0.5 * (p.array() - u).abs().sum();
}

namespace {

// Columns of T^N, one starting point at a time.
template <typename Fn>
void for_each_column_power(const GroupDistribution& q, const HomogeneousSpace& x, int N,
                           std::size_t cap, Fn&& fn) {
  if (N < 0) throw DomainError("negative step count");
  const std::size_t m = x.checked_size(cap);
  const auto t = action_matrix(q, x, cap);
  Eigen::VectorXd v(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    v.setZero();
    v(static_cast<Eigen::Index>(i)) = 1.0;
    for (int s = 0; s < N; ++s) v = t * v;
    fn(i, v);
  }
}

}  // namespace

double exhaustive_average_tv_sq(const GroupDistribution& q, const HomogeneousSpace& x,
                                int N, std::size_t cap) {
  double acc = 0.0;
  std::size_t count = 0;
  for_each_column_power(q, x, N, cap, [&](std::size_t, const Eigen::VectorXd& v) {
    const double tv = tv_to_uniform(v);
    acc += tv * tv;
    ++count;
  });
  return acc / static_cast<double>(count);
}

PerStateTv per_state_tv(const GroupDistribution& q, const HomogeneousSpace& x, int N,
                        std::size_t cap) {
  PerStateTv r;
  for_each_column_power(q, x, N, cap, [&](std::size_t, const Eigen::VectorXd& v) {
    r.tv.push_back(tv_to_uniform(v));
  });
  r.argmin = static_cast<std::size_t>(std::min_element(r.tv.begin(), r.tv.end()) - r.tv.begin());
  r.argmax = static_cast<std::size_t>(std::max_element(r.tv.begin(), r.tv.end()) - r.tv.begin());
  return r;
}

StartIndependence start_independent_norm(const GroupDistribution& q,
                                         const HomogeneousSpace& x, int N,
                                         double tol, std::size_t cap) {
  StartIndependence r;
  if (x.kind() == HomogeneousSpace::Kind::Group) {
    r.holds = true;
    r.reason = "group";
    return r;
  }
  if (q.is_class_invariant()) {
    r.holds = true;
    r.reason = "class_invariant";
    return r;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for_each_column_power(q, x, N, cap, [&](std::size_t, const Eigen::VectorXd& v) {
    const double u = 1.0 / static_cast<double>(v.size());
    const double norm = (v.array() - u).matrix().norm();
    lo = std::min(lo, norm);
    hi = std::max(hi, norm);
  });
  r.max_spread = hi - lo;
  r.holds = r.max_spread <= tol;
  r.reason = r.holds ? "exhaustive" : "norms_differ";
  return r;
}

std::size_t count_bad_states(const GroupDistribution& q, const HomogeneousSpace& x,
                             int N, double alpha, std::size_t cap) {
  std::size_t bad = 0;
  for_each_column_power(q, x, N, cap, [&](std::size_t, const Eigen::VectorXd& v) {
    if (tv_to_uniform(v) >= alpha) ++bad;
  });
  return bad;
}

double bad_state_fraction_bound(const BoundReport& report, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (report.upper_avg == 0.0) return 0.0;
  return std::exp(std::log(report.upper_avg) + log_abs(report.space_size) -
                  2.0 * std::log(alpha));
}

double bad_state_fraction_bound(const GroupDistribution& q, const HomogeneousSpace& x,
                                int N, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  return bad_state_fraction_bound(average_tv_sandwich(q, x, N), alpha);
}

}  // namespace symwalk
