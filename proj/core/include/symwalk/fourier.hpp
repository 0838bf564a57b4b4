#pragma once

#include "symwalk/distribution.hpp"
#include "symwalk/irrep.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/space.hpp"

#include <Eigen/Dense>

#include <complex>

namespace symwalk {

using ComplexMatrix = Eigen::MatrixXcd;

struct FourierMatrix {
  Partition shape;
  ComplexMatrix entries;
};

/// sum_g Q(g) rho(g).
FourierMatrix fourier_transform(const GroupDistribution& q, const Irrep& rho);

/// Tr(A A*).
double frobenius_norm_sq(const ComplexMatrix& a);
inline double frobenius_norm_sq(const FourierMatrix& f) {
  return frobenius_norm_sq(f.entries);
}

/// For a class distribution the transform at S^lambda is r I with
///   r = sum_c mass(c) chi_lambda(c) / dim(lambda)  (= a_lambda |G| / dim).
double class_scalar(const ClassDistribution& q, const Partition& lambda);

/// <Q, chi_lambda> = sum_g Q(g) chi_lambda(g) / |G|, returned as the
/// scaled value a_lambda |G| = sum_c mass(c) chi_lambda(c) to stay in range.
double class_character_sum(const ClassDistribution& q, const Partition& lambda);

struct ParsevalResult {
  double lhs = 0.0;  // sum_x || q.e_x - u ||_2^2, by explicit action
  double rhs = 0.0;  // sum_{lambda != (n)} m_lambda || Q^(lambda) ||_F^2
};

/// Both sides of the Parseval identity on the tabloid module M^mu.
ParsevalResult parseval_check(const GroupDistribution& q, const Partition& mu,
                              std::size_t space_cap = kDefaultSpaceCap);

}  // namespace symwalk
