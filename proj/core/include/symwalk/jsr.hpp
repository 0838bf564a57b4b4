#pragma once

// Joint spectral radius: lower bounds from products, upper bounds from
// quadratic-form certificates on symmetric tensor powers, and the Fourier
// jsr of a family of distributions relative to a homogeneous space.
//
// A degree-2d certificate is a positive definite P on Sym^d(C^n) with
//   gamma^{2d} P - L_j^* P L_j  >=  s_j I   for every j,
// where L_j is the lift of A_j. With s = min_j s_j this gives
//   jsr <= (gamma^{2d} + max(0, -s) / lambda_min(P))^{1/(2d)}.

#include "symwalk/distribution.hpp"
#include "symwalk/fourier.hpp"
#include "symwalk/space.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symwalk {

class MatrixSet {
 public:
  MatrixSet() = default;
  /// Throws DomainError when empty, non-square or of mixed sizes.
  explicit MatrixSet(std::vector<ComplexMatrix> matrices);

  int dim() const { return dim_; }
  std::size_t size() const { return matrices_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<ComplexMatrix>& matrices() const { return matrices_; }
  bool is_real(double tol = 0.0) const;

 private:
  int dim_ = 0;
  std::vector<ComplexMatrix> matrices_;
};

/// Largest eigenvalue magnitude (Hessenberg reduction + shifted QR).
double spectral_radius(const ComplexMatrix& a);
/// Largest singular value.
double spectral_norm(const ComplexMatrix& a);

struct ProductSearch {
  double lower = 0.0;
  std::vector<int> word;  // a word attaining the lower bound
  int depth = 0;
  std::uint64_t multiplications = 0;
  bool complete = true;  // false when the budget ran out
};

/// max over words |w| <= depth of rho(A_w)^{1/|w|}, with branches pruned when
/// a norm bound cannot beat the incumbent. Stops early (complete = false)
/// when the multiplication budget is exhausted.
ProductSearch search_products(const MatrixSet& s, int depth,
                              std::uint64_t budget = 1'000'000);

/// As search_products, but throws BudgetExceeded on an incomplete search.
double jsr_lower_bound(const MatrixSet& s, int depth, std::uint64_t budget = 1'000'000);

/// max over words |w| = k of ||A_w||^{1/k}; an upper bound for every k.
/// Throws BudgetExceeded when m^k > budget.
double product_norm_upper(const MatrixSet& s, int k, std::uint64_t budget = 1'000'000);

// --- certificates --------------------------------------------------------

/// Orthonormal monomial basis of Sym^d(C^n): multi-indices in lex order.
std::vector<std::vector<int>> symmetric_basis(int n, int d);

/// Operator induced by A on Sym^d, in the basis scaled by sqrt(d!/alpha!)
/// (so that ||z^{(d)}|| = ||z||^d and the lift is multiplicative).
ComplexMatrix symmetric_lift(const ComplexMatrix& a, int d);

struct NormCertificate {
  int d = 1;  // degree 2d
  double gamma = 0.0;
  ComplexMatrix gram;          // P, trace-normalized
  std::vector<double> slacks;  // lambda_min(gamma^{2d} P - L_j^* P L_j)
  double min_eig_p = 0.0;
  double certified_upper = 0.0;

  int degree() const { return 2 * d; }
};

struct CertifyOptions {
  std::size_t lift_cap = 10;
  int max_newton = 400;  // total Newton steps
  double tol = 1e-8;     // accepted negative slack, relative to gamma^{2d}
};

struct CertifyResult {
  bool feasible = false;  // min slack >= -tol gamma^{2d} and P positive definite
  std::optional<NormCertificate> certificate;  // best P found, even if infeasible
  std::string status;  // "feasible", "infeasible", "unknown"
  int iterations = 0;
};

/// Looks for a certificate of jsr <= gamma. "infeasible" means the solver's
/// dual bound shows that no certificate of this degree exists at gamma;
/// "unknown" means the iteration budget ran out.
CertifyResult certify_upper_bound(const MatrixSet& s, double gamma, int d,
                                  const CertifyOptions& opts = {});

/// Certificate with P = I: valid for any gamma >= max_j ||A_j||.
NormCertificate identity_certificate(const MatrixSet& s, int d);

struct CertificateCheck {
  bool passed = false;
  double min_eig_p = 0.0;
  double max_eig_p = 0.0;
  std::vector<double> slacks;
  double certified_upper = 0.0;
  std::string message;
};

/// Recomputes every eigenvalue margin from the matrices and P alone.
/// Passes when lambda_min(P) >= eps lambda_max(P) and every slack is
/// >= -tol gamma^{2d}.
CertificateCheck verify_certificate(const MatrixSet& s, const NormCertificate& cert,
                                    double tol = 1e-8, double eps = 1e-8);

// --- estimation driver ---------------------------------------------------

struct JsrOptions {
  double tol = 1e-3;
  int max_depth = 8;
  std::uint64_t product_budget = 1'000'000;
  int norm_power_max = 6;  // product-norm upper bound for k = 2..norm_power_max
  std::vector<int> degrees{1, 2, 3};
  int max_bisection = 40;
  CertifyOptions certify;
};

struct JsrEstimate {
  double lower = 0.0;
  double upper = 0.0;
  int depth = 0;
  std::vector<int> lower_word;
  std::optional<NormCertificate> certificate;
  std::string upper_source;  // "norm", "certificate" or "product_norm"
  bool budget_exhausted = false;
  int bisection_steps = 0;
};

/// Bisects between the product lower bound and the largest spectral norm,
/// probing certificates of increasing degree. Always returns a valid
/// interval; budget exhaustion only widens it.
JsrEstimate jsr_estimate(const MatrixSet& s, const JsrOptions& opts = {});

struct IrrepJsr {
  Partition shape;
  BigInt multiplicity;
  int dim = 0;
  std::string route;  // "matrix" or "class"
  MatrixSet matrices;
  JsrEstimate estimate;
};

struct FourierJsr {
  std::vector<IrrepJsr> irreps;
  double lower = 0.0;
  double upper = 0.0;
  std::string verdict;  // "mixes", "does not mix", "undetermined"
  bool budget_exhausted = false;
};

/// Per-irrep jsr of the transforms at every nontrivial irreducible in C X,
/// and the overall interval [max lowers, max uppers].
FourierJsr fourier_jsr(const std::vector<GroupDistribution>& qs,
                       const HomogeneousSpace& x, const JsrOptions& opts = {},
                       std::size_t dim_cap = 64);

std::string mixing_verdict(double lower, double upper);

}  // namespace symwalk
