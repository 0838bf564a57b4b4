#include "support.hpp"

#include "symwalk/distribution.hpp"
#include "symwalk/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace symwalk;
using symwalk::testing::perm;

namespace {

double total(const GroupDistribution& q) {
  double s = 0.0;
  for (const auto& [g, p] : q.weights()) s += p;
  return s;
}

// Direct evaluation of (P * Q)(h) = sum_g P(h g^{-1}) Q(g).
double convolution_at(const GroupDistribution& p, const GroupDistribution& q, const Permutation& h) {
  double s = 0.0;
  for (const auto& g : enumerate_group(p.n())) s += p.weight(h * g.inverse()) * q.weight(g);
  return s;
}

}  // namespace

TEST(GroupDistribution, Validation) {
  EXPECT_THROW(GroupDistribution(3, {{perm({0, 1, 2}), 0.5}}), DomainError);
  EXPECT_THROW(GroupDistribution(3, {{perm({0, 1, 2}), 1.5}, {perm({1, 0, 2}), -0.5}}), DomainError);
  EXPECT_THROW(GroupDistribution(3, {{perm({0, 1}), 1.0}}), DomainError);
  const GroupDistribution q(3, {{perm({0, 1, 2}), 1.0}, {perm({1, 0, 2}), 0.0}});
  EXPECT_EQ(q.support_size(), 1u);
}

TEST(GroupDistribution, ExampleDistributionsLoad) {
  const auto q1 = symwalk::testing::load_q(1);
  const auto q2 = symwalk::testing::load_q(2);
  EXPECT_DOUBLE_EQ(q1.weight(Permutation::identity(3)), 0.25);
  EXPECT_DOUBLE_EQ(q1.weight(parse_permutation("(0 1 2)")), 0.25);
  EXPECT_DOUBLE_EQ(q2.weight(parse_permutation("(0 2)")), 0.25);
  EXPECT_FALSE(q1.is_class_invariant());
  EXPECT_FALSE(q1.is_symmetric());
}

TEST(GroupDistribution, ClassInvariance) {
  EXPECT_TRUE(GroupDistribution::uniform(4).is_class_invariant());
  EXPECT_TRUE(GroupDistribution::point_mass(Permutation::identity(4)).is_class_invariant());
  EXPECT_FALSE(GroupDistribution::point_mass(parse_permutation("(0 1)", 4)).is_class_invariant());
  EXPECT_THROW(symwalk::testing::load_q(1).to_class_distribution(), NotClassInvariant);
}

TEST(Convolution, MatchesDirectSum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = symwalk::testing::random_distribution(4, rng, 6);
    const auto q = symwalk::testing::random_distribution(4, rng, 5);
    const auto pq = convolve(p, q);
    EXPECT_NEAR(total(pq), 1.0, 1e-12);
    for (const auto& h : enumerate_group(4)) EXPECT_NEAR(pq.weight(h), convolution_at(p, q, h), 1e-14);
  }
}

TEST(Convolution, UniformAbsorbs) {
  std::mt19937_64 rng(3);
  const auto q = symwalk::testing::random_distribution(4, rng);
  const auto u = GroupDistribution::uniform(4);
  for (const auto& r : {convolve(q, u), convolve(u, q)}) {
    for (const auto& g : enumerate_group(4)) EXPECT_NEAR(r.weight(g), 1.0 / 24, 1e-14);
  }
}

TEST(Convolution, PowersAreAssociative) {
  const auto q = symwalk::testing::load_q(1);
  const auto q3 = convolution_power(q, 3);
  const auto direct = convolve(q, convolve(q, q));
  for (const auto& g : enumerate_group(3)) EXPECT_NEAR(q3.weight(g), direct.weight(g), 1e-15);
  const auto q0 = convolution_power(q, 0);
  EXPECT_DOUBLE_EQ(q0.weight(Permutation::identity(3)), 1.0);
}

TEST(ClassDistribution, LazyTranspositionWeights) {
  for (int n = 2; n <= 6; ++n) {
    const auto g = ClassDistribution::lazy_transposition(n).materialize();
    EXPECT_NEAR(g.weight(Permutation::identity(n)), 1.0 / n, 1e-15);
    EXPECT_NEAR(g.weight(Permutation::transposition(n, 0, 1)), 2.0 / (n * n), 1e-15);
    EXPECT_NEAR(total(g), 1.0, 1e-12);
    EXPECT_TRUE(g.is_class_invariant());
  }
}

TEST(ClassDistribution, UniformMaterializesToUniform) {
  const auto g = ClassDistribution::uniform(5).materialize();
  EXPECT_EQ(g.support_size(), 120u);
  for (const auto& [h, p] : g.weights()) EXPECT_NEAR(p, 1.0 / 120, 1e-15);
}

TEST(ClassDistribution, RoundTripThroughGroupForm) {
  const auto c = ClassDistribution::uniform_class(CycleType::k_cycle(5, 3));
  const auto back = c.materialize().to_class_distribution();
  EXPECT_EQ(back.masses().size(), 1u);
  EXPECT_NEAR(back.masses().begin()->second, 1.0, 1e-12);
  EXPECT_THROW(ClassDistribution::uniform_class(CycleType::k_cycle(12, 12)).materialize(1000),
               CapExceeded);
}

TEST(Sampler, FrequenciesMatchWeights) {
  const auto q = symwalk::testing::load_q(2);
  const PermutationSampler s(q);
  RandomStream rng(17, 0);
  const int m = 120000;
  std::map<Permutation, int> counts;
  for (int i = 0; i < m; ++i) ++counts[s.sample(rng)];
  double chi2 = 0.0;
  for (const auto& g : enumerate_group(3)) {
    const double e = q.weight(g) * m;
    chi2 += (counts[g] - e) * (counts[g] - e) / e;
  }
  EXPECT_LT(chi2, 20.52);  // 5 d.o.f., 0.999 quantile
}

TEST(Sampler, ClassSamplerIsUniformInsideClass) {
  const auto c = ClassDistribution::lazy_transposition(4);
  const PermutationSampler s(c);
  RandomStream rng(23, 1);
  const int m = 100000;
  std::map<Permutation, int> counts;
  for (int i = 0; i < m; ++i) ++counts[s.sample(rng)];
  const auto g = c.materialize();
  EXPECT_EQ(counts.size(), g.support_size());
  double chi2 = 0.0;
  for (const auto& [h, p] : g.weights()) chi2 += (counts[h] - p * m) * (counts[h] - p * m) / (p * m);
  EXPECT_LT(chi2, 24.32);  // 6 d.o.f., 0.9995 quantile
}

TEST(Sampler, RandomPermutationIsUniform) {
  RandomStream rng(31, 0);
  const int m = 60000;
  std::map<Permutation, int> counts;
  for (int i = 0; i < m; ++i) ++counts[random_permutation(4, rng)];
  ASSERT_EQ(counts.size(), 24u);
  double chi2 = 0.0;
  for (const auto& [g, c] : counts) chi2 += (c - m / 24.0) * (c - m / 24.0) / (m / 24.0);
  EXPECT_LT(chi2, 49.73);  // 23 d.o.f., 0.999 quantile
}
