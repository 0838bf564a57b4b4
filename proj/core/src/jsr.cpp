#include "symwalk/jsr.hpp"

#include "symwalk/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace symwalk {

MatrixSet::MatrixSet(std::vector<ComplexMatrix> matrices) : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw DomainError("matrix set must be nonempty");
  dim_ = static_cast<int>(matrices_[0].rows());
  for (const auto& a : matrices_) {
    if (a.rows() != dim_ || a.cols() != dim_) {
      throw DomainError("matrix set needs square matrices of one size");
    }
    if (!a.allFinite()) throw DomainError("matrix entries must be finite");
  }
}

bool MatrixSet::is_real(double tol) const {
  for (const auto& a : matrices_) {
    if (a.imag().cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

double spectral_radius(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("spectral_radius: matrix is not square");
  if (a.rows() == 0) return 0.0;
  if (a.rows() == 1) return std::abs(a(0, 0));
  Eigen::ComplexEigenSolver<ComplexMatrix> es(a, false);
  if (es.info() != Eigen::Success) throw Error("eigenvalue iteration did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

namespace {

// True when no proper rotation of w is lexicographically smaller; the other
// rotations have the same spectral radius.
bool is_min_rotation(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const int a = w[(i + r) % n];
      const int b = w[i];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

}  // namespace

ProductSearch search_products(const MatrixSet& s, int depth, std::uint64_t budget) {
  if (depth < 1) throw DomainError("product depth must be at least 1");
  ProductSearch out;
  out.depth = depth;
  double mu = 0.0;
  for (const auto& a : s.matrices()) mu = std::max(mu, spectral_norm(a));

  std::vector<int> word;
  auto dfs = [&](auto&& self, const ComplexMatrix& prefix) -> void {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!out.complete) return;
      if (out.multiplications >= budget) {
        out.complete = false;
        return;
      }
      ComplexMatrix p = word.empty() ? s[j] : ComplexMatrix(prefix * s[j]);
      if (!word.empty()) ++out.multiplications;
      word.push_back(static_cast<int>(j));
      const auto len = static_cast<int>(word.size());
      if (is_min_rotation(word)) {
        const double v = std::pow(spectral_radius(p), 1.0 / len);
        if (v > out.lower) {
          out.lower = v;
          out.word = word;
        }
      }
      if (len < depth) {
        // rho(P Q) <= ||P||_F mu^{K - len} for any extension to length K
        const double pn = p.norm();
        double bound = 0.0;
        for (int k = len + 1; k <= depth; ++k) {
          bound = std::max(bound, std::pow(pn * std::pow(mu, k - len), 1.0 / k));
        }
        if (bound > out.lower) self(self, p);
      }
      word.pop_back();
    }
  };
  dfs(dfs, ComplexMatrix());
  return out;
}

double jsr_lower_bound(const MatrixSet& s, int depth, std::uint64_t budget) {
  const ProductSearch r = search_products(s, depth, budget);
  if (!r.complete) {
    throw BudgetExceeded("product search at depth " + std::to_string(depth) +
                         " exceeded " + std::to_string(budget) + " multiplications");
  }
  return r.lower;
}

double product_norm_upper(const MatrixSet& s, int k, std::uint64_t budget) {
  if (k < 1) throw DomainError("product length must be at least 1");
  std::uint64_t words = 1;
  for (int i = 0; i < k; ++i) {
    if (words > budget / s.size()) {
      throw BudgetExceeded("product_norm_upper: too many words");
    }
    words *= s.size();
  }
  double best = 0.0;
  auto dfs = [&](auto&& self, const ComplexMatrix& prefix, int len) -> void {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const ComplexMatrix p = len == 0 ? s[j] : ComplexMatrix(prefix * s[j]);
      if (len + 1 == k) {
        best = std::max(best, spectral_norm(p));
      } else {
        self(self, p, len + 1);
      }
    }
  };
  dfs(dfs, ComplexMatrix(), 0);
  return std::pow(best, 1.0 / k);
}

// --- symmetric powers ----------------------------------------------------

std::vector<std::vector<int>> symmetric_basis(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("symmetric_basis: need n, d >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      alpha[static_cast<std::size_t>(i)] = left;
      out.push_back(alpha);
      return;
    }
    for (int v = left; v >= 0; --v) {
      alpha[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

ComplexMatrix symmetric_lift(const ComplexMatrix& a, int d) {
  if (a.rows() != a.cols()) throw DomainError("symmetric_lift: matrix is not square");
  const int n = static_cast<int>(a.rows());
  if (d == 1) return a;
  const auto basis = symmetric_basis(n, d);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

  auto log_fact = [](const std::vector<int>& alpha) {
    double s = 0.0;
    for (int v : alpha) s += std::lgamma(v + 1.0);
    return s;
  };

  const auto dimension = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix lift = ComplexMatrix::Zero(dimension, dimension);
  using Poly = std::map<std::vector<int>, std::complex<double>>;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto& alpha = basis[r];
    // (A z)^alpha = prod_i (sum_j A_ij z_j)^{alpha_i}
    Poly poly{{std::vector<int>(static_cast<std::size_t>(n), 0), 1.0}};
    for (int i = 0; i < n; ++i) {
      for (int rep = 0; rep < alpha[static_cast<std::size_t>(i)]; ++rep) {
        Poly next;
        for (const auto& [mono, coef] : poly) {
          for (int j = 0; j < n; ++j) {
            if (a(i, j) == 0.0) continue;
            auto m = mono;
            ++m[static_cast<std::size_t>(j)];
            next[m] += coef * a(i, j);
          }
        }
        poly = std::move(next);
      }
    }
    const double la = log_fact(alpha);
    for (const auto& [beta, coef] : poly) {
      const int c = index.at(beta);
      lift(static_cast<Eigen::Index>(r), c) = coef * std::exp(0.5 * (log_fact(beta) - la));
    }
  }
  return lift;
}

namespace {

double lifted_dimension(int n, int d) {
  // binom(n + d - 1, d)
  double v = 1.0;
  for (int i = 1; i <= d; ++i) v = v * (n + i - 1) / i;
  return v;
}

double min_eig_hermitian(const ComplexMatrix& h) {
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double certified_from(double gamma, int d, double min_slack, double min_eig_p) {
  const double g2d = std::pow(gamma, 2.0 * d);
  if (min_slack >= 0.0) return gamma;
  if (!(min_eig_p > 0.0)) return std::numeric_limits<double>::infinity();
  return std::pow(g2d + (-min_slack) / min_eig_p, 1.0 / (2.0 * d));
}

}  // namespace

NormCertificate identity_certificate(const MatrixSet& s, int d) {
  NormCertificate c;
  c.d = d;
  for (const auto& a : s.matrices()) c.gamma = std::max(c.gamma, spectral_norm(a));
  const auto dimension = static_cast<Eigen::Index>(lifted_dimension(s.dim(), d) + 0.5);
  c.gram = ComplexMatrix::Identity(dimension, dimension) / static_cast<double>(dimension);
  c.min_eig_p = 1.0 / static_cast<double>(dimension);
  const double g2d = std::pow(c.gamma, 2.0 * d);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& a : s.matrices()) {
    const ComplexMatrix l = symmetric_lift(a, d);
    const double sl = min_eig_hermitian(g2d * c.gram - l.adjoint() * c.gram * l);
    c.slacks.push_back(sl);
    worst = std::min(worst, sl);
  }
  c.certified_upper = certified_from(c.gamma, d, worst, c.min_eig_p);
  return c;
}

CertificateCheck verify_certificate(const MatrixSet& s, const NormCertificate& cert,
                                    double tol, double eps) {
  CertificateCheck chk;
  chk.certified_upper = std::numeric_limits<double>::infinity();
  if (cert.d < 1 || !(cert.gamma >= 0.0)) {
    chk.message = "invalid degree or level";
    return chk;
  }
  const auto dimension = static_cast<Eigen::Index>(lifted_dimension(s.dim(), cert.d) + 0.5);
  if (cert.gram.rows() != dimension || cert.gram.cols() != dimension) {
    chk.message = "gram matrix has the wrong size for the lifted space";
    return chk;
  }
  const double herm_err = (cert.gram - cert.gram.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-9 * std::max(1.0, cert.gram.cwiseAbs().maxCoeff())) {
    chk.message = "gram matrix is not hermitian";
    return chk;
  }
  const ComplexMatrix p = 0.5 * (cert.gram + cert.gram.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p, Eigen::EigenvaluesOnly);
  chk.min_eig_p = es.eigenvalues()(0);
  chk.max_eig_p = es.eigenvalues()(dimension - 1);

  const double g2d = std::pow(cert.gamma, 2.0 * cert.d);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& a : s.matrices()) {
    const ComplexMatrix l = symmetric_lift(a, cert.d);
    const double sl = min_eig_hermitian(g2d * p - l.adjoint() * p * l);
    chk.slacks.push_back(sl);
    worst = std::min(worst, sl);
  }
  if (!(chk.min_eig_p > 0.0) || chk.min_eig_p < eps * chk.max_eig_p) {
    chk.message = "gram matrix is not positive definite";
    return chk;
  }
  chk.certified_upper = certified_from(cert.gamma, cert.d, worst, chk.min_eig_p);
  if (worst < -tol * g2d) {
    chk.message = "constraint margin below tolerance";
    return chk;
  }
  chk.passed = true;
  chk.message = "ok";
  return chk;
}

// --- bisection driver ----------------------------------------------------

JsrEstimate jsr_estimate(const MatrixSet& s, const JsrOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("jsr_estimate: tol must be positive");
  if (opts.degrees.empty()) throw DomainError("jsr_estimate: no certificate degrees");
  JsrEstimate est;

  const ProductSearch ps = search_products(s, opts.max_depth, opts.product_budget);
  est.lower = ps.lower;
  est.lower_word = ps.word;
  est.depth = ps.depth;
  est.budget_exhausted = !ps.complete;

  NormCertificate c0 = identity_certificate(s, opts.degrees.front());
  est.upper = c0.certified_upper;
  est.certificate = c0;
  est.upper_source = "norm";

  for (int k = 2; k <= opts.norm_power_max; ++k) {
    if (est.upper - est.lower <= opts.tol) break;
    try {
      const double u = product_norm_upper(s, k, opts.product_budget);
      if (u < est.upper) {
        est.upper = u;
        est.upper_source = "product_norm";
      }
    } catch (const BudgetExceeded&) {
      est.budget_exhausted = true;
      break;
    }
  }

  // a degree proven infeasible at gamma stays infeasible below gamma
  std::map<int, double> infeasible_at;
  double lo = est.lower;
  while (est.upper - est.lower > opts.tol && est.bisection_steps < opts.max_bisection) {
    const double gamma = 0.5 * (lo + est.upper);
    if (!(gamma > lo) || !(gamma < est.upper)) break;
    ++est.bisection_steps;
    bool certified = false;
    for (int d : opts.degrees) {
      if (lifted_dimension(s.dim(), d) > static_cast<double>(opts.certify.lift_cap)) continue;
      if (auto it = infeasible_at.find(d); it != infeasible_at.end() && gamma <= it->second) {
        continue;
      }
      const CertifyResult r = certify_upper_bound(s, gamma, d, opts.certify);
      if (r.certificate) {
        const CertificateCheck chk = verify_certificate(s, *r.certificate, opts.certify.tol);
        if (chk.passed && chk.certified_upper < est.upper) {
          est.upper = chk.certified_upper;
          est.certificate = *r.certificate;
          est.certificate->certified_upper = chk.certified_upper;
          est.upper_source = "certificate";
        }
        if (r.feasible && chk.passed) {
          certified = true;
          break;
        }
      }
      if (r.status == "infeasible") {
        infeasible_at[d] = std::max(infeasible_at[d], gamma);
      } else if (r.status == "unknown") {
        est.budget_exhausted = true;
      }
    }
    if (!certified) lo = gamma;
    if (est.upper - lo <= 0.25 * opts.tol) break;
  }
  return est;
}

std::string mixing_verdict(double lower, double upper) {
  if (upper < 1.0) return "mixes";
  if (lower >= 1.0) return "does not mix";
  return "undetermined";
}

}  // namespace symwalk
