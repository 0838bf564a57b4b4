#include "symwalk/distribution.hpp"

#include "symwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symwalk {

namespace {

void check_total(double total, double tol) {
  if (!(std::abs(total - 1.0) <= tol)) {
    throw DomainError("probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

}  // namespace

GroupDistribution::GroupDistribution(int n, std::map<Permutation, double> weights,
                                     double tol)
    : n_(n) {
  double total = 0.0;
  for (auto& [g, p] : weights) {
    if (g.degree() != n) throw DomainError("distribution element has the wrong degree");
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw DomainError("probabilities must be finite and nonnegative");
    }
    total += p;
    if (p > 0.0) weights_.emplace(g, p);
  }
  check_total(total, tol);
}

GroupDistribution GroupDistribution::point_mass(const Permutation& g) {
  return GroupDistribution(g.degree(), {{g, 1.0}});
}

GroupDistribution GroupDistribution::uniform(int n) {
  const auto elements = enumerate_group(n);
  const double p = 1.0 / static_cast<double>(elements.size());
  std::map<Permutation, double> w;
  for (const auto& g : elements) w.emplace_hint(w.end(), g, p);
  return GroupDistribution(n, std::move(w), 1e-9);
}

double GroupDistribution::weight(const Permutation& g) const {
  const auto it = weights_.find(g);
  return it == weights_.end() ? 0.0 : it->second;
}

bool GroupDistribution::is_class_invariant(double tol) const {
  // every class meeting the support must be covered, with equal weights
  std::map<CycleType, std::pair<double, std::size_t>> seen;
  for (const auto& [g, p] : weights_) {
    auto [it, fresh] = seen.try_emplace(cycle_type(g), p, 0);
    if (!fresh && std::abs(it->second.first - p) > tol) return false;
    ++it->second.second;
  }
  for (const auto& [c, info] : seen) {
    if (conjugacy_class_size(c) != info.second) return false;
  }
  return true;
}

bool GroupDistribution::is_symmetric(double tol) const {
  for (const auto& [g, p] : weights_) {
    if (std::abs(weight(g.inverse()) - p) > tol) return false;
  }
  return true;
}

std::map<CycleType, double> GroupDistribution::class_masses() const {
  std::map<CycleType, double> out;
  for (const auto& [g, p] : weights_) out[cycle_type(g)] += p;
  return out;
}

ClassDistribution GroupDistribution::to_class_distribution(double tol) const {
  if (!is_class_invariant(tol)) {
    throw NotClassInvariant("distribution is not constant on conjugacy classes");
  }
  return ClassDistribution(n_, class_masses(), 1e-9);
}

ClassDistribution::ClassDistribution(int n, std::map<CycleType, double> masses,
                                     double tol)
    : n_(n) {
  double total = 0.0;
  for (auto& [c, p] : masses) {
    if (c.n() != n) throw DomainError("class distribution has the wrong degree");
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw DomainError("probabilities must be finite and nonnegative");
    }
    total += p;
    if (p > 0.0) masses_.emplace(c, p);
  }
  check_total(total, tol);
}

ClassDistribution ClassDistribution::uniform_class(const CycleType& c) {
  return ClassDistribution(c.n(), {{c, 1.0}});
}

ClassDistribution ClassDistribution::lazy_transposition(int n) {
  if (n < 2) throw DomainError("lazy_transposition needs n >= 2");
  const double nn = n;
  // n(n-1)/2 transpositions at 2/n^2 each: total (n-1)/n
  return ClassDistribution(n, {{CycleType::identity(n), 1.0 / nn},
                               {CycleType::k_cycle(n, 2), (nn - 1.0) / nn}},
                           1e-12);
}

ClassDistribution ClassDistribution::uniform(int n) {
  std::map<CycleType, double> m;
  const BigInt order = factorial(n);
  for (const auto& c : all_cycle_types(n)) {
    m.emplace(c, std::exp(log_abs(conjugacy_class_size(c)) - log_abs(order)));
  }
  return ClassDistribution(n, std::move(m), 1e-9);
}

GroupDistribution ClassDistribution::materialize(std::size_t max_support) const {
  BigInt total = 0;
  for (const auto& [c, p] : masses_) total += conjugacy_class_size(c);
  if (total > max_support) {
    throw CapExceeded("class distribution support " + total.str() +
                      " exceeds the cap " + std::to_string(max_support));
  }
  std::map<Permutation, double> w;
  for (const auto& [c, p] : masses_) {
    const auto members = enumerate_class(c, max_support);
    const double each = p / static_cast<double>(members.size());
    for (const auto& g : members) w.emplace(g, each);
  }
  return GroupDistribution(n_, std::move(w), 1e-9);
}

GroupDistribution convolve(const GroupDistribution& p, const GroupDistribution& q) {
  if (p.n() != q.n()) throw DomainError("convolve: degree mismatch");
  std::map<Permutation, double> w;
  for (const auto& [a, pa] : p.weights()) {
    for (const auto& [b, qb] : q.weights()) w[compose(a, b)] += pa * qb;
  }
  return GroupDistribution(p.n(), std::move(w), 1e-9);
}

GroupDistribution convolution_power(const GroupDistribution& q, int N) {
  if (N < 0) throw DomainError("convolution_power: negative exponent");
  GroupDistribution result = GroupDistribution::point_mass(Permutation::identity(q.n()));
  for (int i = 0; i < N; ++i) result = convolve(q, result);
  return result;
}

namespace {

std::vector<double> cumulative(const std::vector<double>& weights) {
  std::vector<double> cdf(weights.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) cdf[i] = acc += weights[i];
  if (!cdf.empty()) cdf.back() = 1.0;  // absorb rounding in the last atom
  return cdf;
}

}  // namespace

PermutationSampler::PermutationSampler(const GroupDistribution& q) : n_(q.n()) {
  std::vector<double> w;
  for (const auto& [g, p] : q.weights()) {
    atoms_.push_back(g);
    w.push_back(p);
  }
  cdf_ = cumulative(w);
}

PermutationSampler::PermutationSampler(const ClassDistribution& q)
    : n_(q.n()), by_class_(true) {
  std::vector<double> w;
  for (const auto& [c, p] : q.masses()) {
    atoms_.push_back(c.representative());
    w.push_back(p);
  }
  cdf_ = cumulative(w);
}

Permutation PermutationSampler::sample(RandomStream& rng) const {
  const double u = rng.uniform01();
  auto idx = static_cast<std::size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) -
                                      cdf_.begin());
  if (idx >= atoms_.size()) idx = atoms_.size() - 1;
  const Permutation& g = atoms_[idx];
  if (!by_class_ || g.is_identity()) return g;
  // sigma g sigma^{-1} is uniform on the class of g
  return conjugate(random_permutation(n_, rng), g);
}

Permutation random_permutation(int n, RandomStream& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = rng.uniform_int(static_cast<std::uint64_t>(i) + 1);
    std::swap(v[static_cast<std::size_t>(i)], v[j]);
  }
  return Permutation(std::move(v));
}

}  // namespace symwalk
