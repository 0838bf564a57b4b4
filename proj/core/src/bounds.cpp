#include "symwalk/errors.hpp"
#include "symwalk/fourier.hpp"
#include "symwalk/symrep.hpp"
#include "symwalk/walks.hpp"

#include <cmath>
#include <limits>

namespace symwalk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& logs) {
  double hi = kNegInf;
  for (double l : logs) hi = std::max(hi, l);
  if (hi == kNegInf) return kNegInf;
  double s = 0.0;
  for (double l : logs) s += std::exp(l - hi);
  return hi + std::log(s);
}

// log |r| for the class scalar r = sum_c mass_c chi(c) / dim. Near r = 1 the
// gap 1 - r is formed from exact integer differences so log1p keeps full
// relative accuracy (k-cycle walks on n = 52 have r within 1e-2 of 1). Away
// from 1 the direct sum is used.
struct ScalarLog {
  double log_abs = kNegInf;  // -inf when r = 0
  int sign = 0;
};

ScalarLog class_scalar_log(const ClassDistribution& q, const Partition& lambda) {
  ScalarLog out;
  const double direct = class_scalar(q, lambda);
  if (std::abs(direct) < 0.5) {
    if (direct == 0.0) return out;
    out.sign = direct > 0 ? 1 : -1;
    out.log_abs = std::log(std::abs(direct));
    return out;
  }
  const BigInt dim = dim_irrep(lambda);
  const double log_dim = log_abs(dim);
  double gap = 0.0;  // r - 1
  for (const auto& [c, mass] : q.masses()) {
    const BigInt diff = character_mn(lambda, c) - dim;
    if (diff == 0) continue;
    const double rel = std::exp(log_abs(diff) - log_dim);
    gap += mass * (diff < 0 ? -rel : rel);
  }
  const double r = 1.0 + gap;
  out.sign = r > 0 ? 1 : -1;
  out.log_abs = std::abs(gap) < 0.5 ? std::log1p(gap) : std::log(std::abs(r));
  return out;
}

struct ClassTerm {
  Partition shape;
  BigInt multiplicity;
  BigInt dim;
  double log_md = 0.0;  // log(m dim)
  ScalarLog r;
};

std::vector<ClassTerm> class_terms(const ClassDistribution& q, const HomogeneousSpace& x) {
  if (q.n() != x.n()) throw DomainError("class bound: degree mismatch");
  std::vector<ClassTerm> terms;
  for (const auto& [lambda, mult] : x.multiplicities()) {
    if (lambda.length() == 1) continue;  // trivial representation
    ClassTerm t{lambda, mult, dim_irrep(lambda), 0.0, class_scalar_log(q, lambda)};
    t.log_md = log_abs(t.multiplicity) + log_abs(t.dim);
    terms.push_back(std::move(t));
  }
  return terms;
}

double term_log(const ClassTerm& t, int N) {
  if (N == 0) return t.log_md;
  if (t.r.sign == 0) return kNegInf;
  return t.log_md + 2.0 * N * t.r.log_abs;
}

}  // namespace

BoundReport average_tv_sandwich(const ClassDistribution& q, const HomogeneousSpace& x,
                                int N) {
  if (N < 0) throw DomainError("negative step count");
  BoundReport rep;
  rep.space_id = x.id();
  rep.space_size = x.size();
  rep.N = N;
  rep.route = "class";
  std::vector<double> logs;
  for (const auto& t : class_terms(q, x)) {
    const double l = term_log(t, N);
    logs.push_back(l);
    rep.rows.push_back({t.shape, t.multiplicity, t.dim, std::exp(l)});
  }
  const double log_upper = log_sum_exp(logs) - std::log(4.0);
  rep.upper_avg = std::exp(log_upper);
  rep.lower_avg = std::exp(log_upper - log_abs(rep.space_size));
  return rep;
}

BoundReport average_tv_sandwich(const GroupDistribution& q, const HomogeneousSpace& x,
                                int N, std::size_t dim_cap) {
  if (q.n() != x.n()) throw DomainError("average_tv_sandwich: degree mismatch");
  if (N < 0) throw DomainError("negative step count");
  if (q.is_class_invariant()) {
    return average_tv_sandwich(q.to_class_distribution(), x, N);
  }
  BoundReport rep;
  rep.space_id = x.id();
  rep.space_size = x.size();
  rep.N = N;
  rep.route = "matrix";
  double sum = 0.0;
  for (const auto& [lambda, mult] : x.multiplicities()) {
    if (lambda.length() == 1) continue;
    const Irrep rho(lambda, dim_cap);
    const ComplexMatrix f = fourier_transform(q, rho).entries;
    ComplexMatrix p = ComplexMatrix::Identity(f.rows(), f.cols());
    for (int i = 0; i < N; ++i) p = f * p;
    const double term = to_double(mult) * frobenius_norm_sq(p);
    rep.rows.push_back({lambda, mult, BigInt(rho.dim()), term});
    sum += term;
  }
  rep.upper_avg = 0.25 * sum;
  rep.lower_avg =
      rep.upper_avg == 0.0 ? 0.0
                           : std::exp(std::log(rep.upper_avg) - log_abs(rep.space_size));
  return rep;
}

double class_function_log_bound(const ClassDistribution& q, const HomogeneousSpace& x,
                                int N) {
  if (N < 0) throw DomainError("negative step count");
  std::vector<double> logs;
  for (const auto& t : class_terms(q, x)) logs.push_back(term_log(t, N));
  return log_sum_exp(logs) - std::log(4.0);
}

double class_function_bound(const ClassDistribution& q, const HomogeneousSpace& x, int N) {
  return std::exp(class_function_log_bound(q, x, N));
}

double class_function_bound(const ClassDistribution& q, const Partition& mu, int N) {
  return class_function_bound(q, HomogeneousSpace::tabloids(mu), N);
}

double class_function_bound(const GroupDistribution& q, const HomogeneousSpace& x, int N) {
  return class_function_bound(q.to_class_distribution(), x, N);
}

double tabloid_cycle_log_bound(int n, int a, int b, int k, int N) {
  if (b < 1 || a < b || a + b != n) {
    throw DomainError("tabloid_cycle_bound: need a >= b >= 1 and a + b = n");
  }
  if (k < 2 || k > n) throw DomainError("tabloid_cycle_bound: need 2 <= k <= n");
  if (N < 0) throw DomainError("negative step count");
  std::vector<double> logs;
  for (int t = 1; t <= b; ++t) {
    const BigInt chi = character_two_row(n - t, t, k);
    const BigInt dim = binomial(n, t) - binomial(n, t - 1);
    const double log_dim = log_abs(dim);
    if (N == 0) {
      logs.push_back(log_dim);
      continue;
    }
    if (chi == 0) continue;
    // chi^{2N} / dim^{2N-1} = dim (chi/dim)^{2N}
    const BigInt diff = chi - dim;
    double log_ratio = 0.0;
    if (diff != 0) {
      const double rel = (diff < 0 ? -1.0 : 1.0) * std::exp(log_abs(diff) - log_dim);
      log_ratio = std::abs(rel) < 0.5 ? std::log1p(rel) : log_abs(chi) - log_dim;
    }
    logs.push_back(log_dim + 2.0 * N * log_ratio);
  }
  return log_sum_exp(logs) - std::log(4.0);
}

double tabloid_cycle_bound(int n, int a, int b, int k, int N) {
  return std::exp(tabloid_cycle_log_bound(n, a, b, k, N));
}

double switched_class_bound(const std::vector<ClassDistribution>& qs,
                            const std::vector<int>& word, const HomogeneousSpace& x) {
  if (qs.empty()) throw DomainError("switched_class_bound: no distributions");
  for (int letter : word) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= qs.size()) {
      throw DomainError("word letter out of range");
    }
  }
  std::vector<std::vector<ClassTerm>> per_q;
  for (const auto& q : qs) per_q.push_back(class_terms(q, x));
  std::vector<double> logs;
  for (std::size_t j = 0; j < per_q[0].size(); ++j) {
    double l = per_q[0][j].log_md;
    for (int letter : word) {
      const ScalarLog& r = per_q[static_cast<std::size_t>(letter)][j].r;
      l = r.sign == 0 ? kNegInf : l + 2.0 * r.log_abs;
    }
    logs.push_back(l);
  }
  return std::exp(log_sum_exp(logs) - std::log(4.0));
}

double switched_class_bound(const std::vector<GroupDistribution>& qs,
                            const std::vector<int>& word, const HomogeneousSpace& x) {
  std::vector<ClassDistribution> cs;
  for (const auto& q : qs) cs.push_back(q.to_class_distribution());
  return switched_class_bound(cs, word, x);
}

}  // namespace symwalk
