// Certificate search: maximize t subject to
//   P - Lt_j^* P Lt_j >= t I  (all j),   P >= t I,   tr P = 1,
// with Lt_j = L_j / gamma^d, by a log-det barrier method. P is written as
// I/N + sum_i y_i B_i over a basis of traceless hermitian matrices (real
// symmetric when every L_j is real).

#include "symwalk/errors.hpp"
#include "symwalk/jsr.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace symwalk {

namespace {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
std::vector<Mat<Scalar>> traceless_basis(int n) {
  std::vector<Mat<Scalar>> basis;
  const double r2 = std::sqrt(0.5);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Mat<Scalar> b = Mat<Scalar>::Zero(n, n);
      b(j, k) = r2;
      b(k, j) = r2;
      basis.push_back(std::move(b));
      if constexpr (!std::is_same_v<Scalar, double>) {
        Mat<Scalar> c = Mat<Scalar>::Zero(n, n);
        c(j, k) = Scalar(0.0, r2);
        c(k, j) = Scalar(0.0, -r2);
        basis.push_back(std::move(c));
      }
    }
  }
  for (int l = 1; l < n; ++l) {
    Mat<Scalar> b = Mat<Scalar>::Zero(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int i = 0; i < l; ++i) b(i, i) = norm;
    b(l, l) = -l * norm;
    basis.push_back(std::move(b));
  }
  return basis;
}

template <typename Scalar>
double real_part(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return v;
  } else {
    return v.real();
  }
}

template <typename Scalar>
struct BarrierSolver {
  int n = 0;                                    // lifted dimension
  std::vector<Mat<Scalar>> lt;                  // scaled lifts
  std::vector<Mat<Scalar>> basis;               // B_i
  std::vector<Mat<Scalar>> offset;              // G_k(I/n)
  std::vector<std::vector<Mat<Scalar>>> dirs;   // G_k(B_i)

  Mat<Scalar> apply_block(std::size_t k, const Mat<Scalar>& p) const {
    if (k == 0) return p;
    const Mat<Scalar>& l = lt[k - 1];
    return p - l.adjoint() * p * l;
  }

  void setup() {
    basis = traceless_basis<Scalar>(n);
    const Mat<Scalar> p0 = Mat<Scalar>::Identity(n, n) / static_cast<double>(n);
    for (std::size_t k = 0; k <= lt.size(); ++k) {
      offset.push_back(apply_block(k, p0));
      std::vector<Mat<Scalar>> d;
      for (const auto& b : basis) d.push_back(apply_block(k, b));
      dirs.push_back(std::move(d));
    }
  }

  std::size_t blocks() const { return offset.size(); }

  Mat<Scalar> block(std::size_t k, const Eigen::VectorXd& y, double t) const {
    Mat<Scalar> s = offset[k];
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (y(static_cast<Eigen::Index>(i)) != 0.0) s += y(static_cast<Eigen::Index>(i)) * dirs[k][i];
    }
    s.diagonal().array() -= t;
    return s;
  }

  Mat<Scalar> gram(const Eigen::VectorXd& y) const {
    Mat<Scalar> p = Mat<Scalar>::Identity(n, n) / static_cast<double>(n);
    for (std::size_t i = 0; i < basis.size(); ++i) p += y(static_cast<Eigen::Index>(i)) * basis[i];
    return 0.5 * (p + p.adjoint());
  }

  // -sum log det S_k, or +inf outside the domain
  double barrier(const Eigen::VectorXd& y, double t) const {
    double f = 0.0;
    for (std::size_t k = 0; k < blocks(); ++k) {
      Eigen::LLT<Mat<Scalar>> llt(block(k, y, t));
      if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
      const auto diag = llt.matrixLLT().diagonal();
      for (Eigen::Index i = 0; i < n; ++i) {
        const double v = real_part<Scalar>(diag(i));
        if (!(v > 0.0)) return std::numeric_limits<double>::infinity();
        f -= 2.0 * std::log(v);
      }
    }
    return f;
  }

  double min_block_eig(const Eigen::VectorXd& y) const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < blocks(); ++k) {
      Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es(block(k, y, 0.0), Eigen::EigenvaluesOnly);
      m = std::min(m, es.eigenvalues()(0));
    }
    return m;
  }
};

struct SolveOutcome {
  Eigen::VectorXd y;
  double t = 0.0;
  std::string status;
  int iterations = 0;
};

template <typename Scalar>
SolveOutcome solve(const BarrierSolver<Scalar>& bs, int max_newton, double tol) {
  const auto p = static_cast<Eigen::Index>(bs.basis.size());
  const double rows = static_cast<double>(bs.blocks()) * bs.n;
  SolveOutcome out;
  out.y = Eigen::VectorXd::Zero(p);
  out.t = bs.min_block_eig(out.y) - 1.0 / bs.n;
  double tau = 10.0 * bs.n;

  while (out.iterations < max_newton) {
    // centering at fixed tau
    for (int inner = 0; inner < 60 && out.iterations < max_newton; ++inner) {
      ++out.iterations;
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(p + 1);
      Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(p + 1, p + 1);
      grad(p) = -tau;
      bool ok = true;
      for (std::size_t k = 0; k < bs.blocks() && ok; ++k) {
        const Mat<Scalar> s = bs.block(k, out.y, out.t);
        Eigen::LLT<Mat<Scalar>> llt(s);
        if (llt.info() != Eigen::Success) {
          ok = false;
          break;
        }
        const Mat<Scalar> r = llt.solve(Mat<Scalar>::Identity(bs.n, bs.n));
        const Eigen::Index nn = static_cast<Eigen::Index>(bs.n) * bs.n;
        Mat<Scalar> u(nn, p + 1);
        Mat<Scalar> v(nn, p + 1);
        for (Eigen::Index i = 0; i <= p; ++i) {
          Mat<Scalar> m = i < p ? Mat<Scalar>(r * bs.dirs[k][static_cast<std::size_t>(i)])
                                : Mat<Scalar>(-r);
          grad(i) -= real_part<Scalar>(m.trace());
          u.col(i) = Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>(m.data(), nn);
          Mat<Scalar> mt = m.transpose();
          v.col(i) = Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>(mt.data(), nn);
        }
        const Mat<Scalar> h = u.transpose() * v;
        for (Eigen::Index a = 0; a <= p; ++a) {
          for (Eigen::Index b = 0; b <= p; ++b) hess(a, b) += real_part<Scalar>(h(a, b));
        }
      }
      if (!ok) break;
      hess = 0.5 * (hess + hess.transpose());
      hess.diagonal().array() += 1e-14 * (1.0 + hess.diagonal().cwiseAbs().maxCoeff());
      Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
      const Eigen::VectorXd step = -ldlt.solve(grad);
      const double decrement = -grad.dot(step);
      if (!(decrement > 2e-10)) break;

      const double f0 = -tau * out.t + bs.barrier(out.y, out.t);
      double alpha = 1.0;
      bool moved = false;
      while (alpha > 1e-12) {
        const Eigen::VectorXd yn = out.y + alpha * step.head(p);
        const double tn = out.t + alpha * step(p);
        const double f1 = -tau * tn + bs.barrier(yn, tn);
        if (f1 <= f0 - 0.25 * alpha * decrement) {
          out.y = yn;
          out.t = tn;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
      if (out.t > 0.0) {
        out.status = "feasible";
        return out;
      }
    }
    // on the central path the optimum is at most t + rows / tau
    if (out.t + 2.0 * rows / tau < -tol) {
      out.status = "infeasible";
      return out;
    }
    if (rows / tau < 0.01 * tol) {
      out.status = out.t >= -tol ? "feasible" : "unknown";
      return out;
    }
    tau *= 8.0;
  }
  out.status = "unknown";
  return out;
}

template <typename Scalar>
CertifyResult run(const MatrixSet& s, double gamma, int d, const CertifyOptions& opts) {
  BarrierSolver<Scalar> bs;
  const double scale = std::pow(gamma, static_cast<double>(d));
  std::vector<ComplexMatrix> lifts;
  for (const auto& a : s.matrices()) {
    const ComplexMatrix l = symmetric_lift(a, d);
    lifts.push_back(l);
    if constexpr (std::is_same_v<Scalar, double>) {
      bs.lt.push_back(l.real() / scale);
    } else {
      bs.lt.push_back(l / scale);
    }
  }
  bs.n = static_cast<int>(lifts[0].rows());
  bs.setup();
  const SolveOutcome sol = solve(bs, opts.max_newton, opts.tol);

  NormCertificate cert;
  cert.d = d;
  cert.gamma = gamma;
  const Mat<Scalar> p = bs.gram(sol.y);
  if constexpr (std::is_same_v<Scalar, double>) {
    cert.gram = p.template cast<std::complex<double>>();
  } else {
    cert.gram = p;
  }
  const CertificateCheck chk = verify_certificate(s, cert, opts.tol);
  cert.slacks = chk.slacks;
  cert.min_eig_p = chk.min_eig_p;
  cert.certified_upper = chk.certified_upper;

  CertifyResult res;
  res.iterations = sol.iterations;
  res.certificate = cert;
  res.feasible = chk.passed && sol.status != "infeasible";
  res.status = res.feasible ? "feasible" : (sol.status == "infeasible" ? "infeasible" : "unknown");
  return res;
}

}  // namespace

CertifyResult certify_upper_bound(const MatrixSet& s, double gamma, int d,
                                  const CertifyOptions& opts) {
  if (!(gamma > 0.0)) throw DomainError("certify_upper_bound: gamma must be positive");
  if (d < 1) throw DomainError("certify_upper_bound: d must be at least 1");
  double lifted = 1.0;
  for (int i = 1; i <= d; ++i) lifted = lifted * (s.dim() + i - 1) / i;
  if (lifted > static_cast<double>(opts.lift_cap)) {
    throw CapExceeded("lifted dimension " + std::to_string(static_cast<long>(lifted)) +
                      " exceeds the cap " + std::to_string(opts.lift_cap));
  }
  if (s.is_real()) return run<double>(s, gamma, d, opts);
  return run<std::complex<double>>(s, gamma, d, opts);
}

}  // namespace symwalk
