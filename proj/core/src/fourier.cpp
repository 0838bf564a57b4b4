#include "symwalk/fourier.hpp"

#include "symwalk/errors.hpp"
#include "symwalk/symrep.hpp"
#include "symwalk/walks.hpp"

#include <cmath>
#include <limits>

namespace symwalk {

FourierMatrix fourier_transform(const GroupDistribution& q, const Irrep& rho) {
  if (q.n() != rho.n()) throw DomainError("fourier_transform: degree mismatch");
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(rho.dim(), rho.dim());
  for (const auto& [g, p] : q.weights()) acc += p * rho.matrix(g);
  return {rho.shape(), acc.cast<std::complex<double>>()};
}

double frobenius_norm_sq(const ComplexMatrix& a) { return a.squaredNorm(); }

double class_character_sum(const ClassDistribution& q, const Partition& lambda) {
  double s = 0.0;
  for (const auto& [c, mass] : q.masses()) {
    s += mass * to_double(character_mn(lambda, c));
  }
  return s;
}

double class_scalar(const ClassDistribution& q, const Partition& lambda) {
  if (q.n() != lambda.n()) throw DomainError("class_scalar: degree mismatch");
  const BigInt dim = dim_irrep(lambda);
  const double log_dim = log_abs(dim);
  double r = 0.0;
  double magnitude = 0.0;
  for (const auto& [c, mass] : q.masses()) {
    const BigInt chi = character_mn(lambda, c);
    if (chi == 0) continue;
    const double ratio = std::exp(log_abs(chi) - log_dim);
    r += mass * (chi < 0 ? -ratio : ratio);
    magnitude += mass * ratio;
  }
  // below the rounding floor of the sum the value is indistinguishable from 0
  const double floor = 4.0 * static_cast<double>(q.masses().size() + 1) *
                       std::numeric_limits<double>::epsilon() * magnitude;
  return std::abs(r) <= floor ? 0.0 : r;
}

ParsevalResult parseval_check(const GroupDistribution& q, const Partition& mu,
                              std::size_t space_cap) {
  if (q.n() != mu.n()) throw DomainError("parseval_check: degree mismatch");
  const auto space = HomogeneousSpace::tabloids(mu);
  const std::size_t m = space.checked_size(space_cap);
  const auto t = action_matrix(q, space, space_cap);

  ParsevalResult r;
  const double u = 1.0 / static_cast<double>(m);
  for (std::size_t x = 0; x < m; ++x) {
    const Eigen::VectorXd col = t.col(static_cast<Eigen::Index>(x));
    r.lhs += (col.array() - u).square().sum();
  }
  for (const auto& [lambda, mult] : young_rule_multiplicities(mu)) {
    if (lambda.length() == 1) continue;
    const Irrep rho(lambda);
    r.rhs += to_double(mult) * frobenius_norm_sq(fourier_transform(q, rho));
  }
  return r;
}

}  // namespace symwalk
