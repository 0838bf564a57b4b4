#include "support.hpp"

#include "symwalk/errors.hpp"
#include "symwalk/space.hpp"
#include "symwalk/symrep.hpp"
#include "symwalk/walks.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace symwalk;

namespace {

std::vector<HomogeneousSpace> small_spaces() {
  return {HomogeneousSpace::tabloids({2, 1}), HomogeneousSpace::tabloids({3, 1}),
          HomogeneousSpace::tabloids({2, 2}), HomogeneousSpace::tabloids({3, 2, 1}),
          HomogeneousSpace::tabloids({1, 1, 1, 1}), HomogeneousSpace::group(4),
          HomogeneousSpace::tours(3), HomogeneousSpace::tours(5), HomogeneousSpace::tours(6)};
}

}  // namespace

TEST(Space, SizesAndIds) {
  EXPECT_EQ(HomogeneousSpace::tabloids({2, 1}).size(), 3);
  EXPECT_EQ(HomogeneousSpace::tabloids({26, 26}).size(), binomial(52, 26));
  EXPECT_EQ(HomogeneousSpace::tours(5).size(), 24);
  EXPECT_EQ(HomogeneousSpace::group(5).size(), 120);
  EXPECT_EQ(HomogeneousSpace::tabloids({2, 1}).id(), "tabloids:2+1");
  EXPECT_EQ(HomogeneousSpace::tours(5).id(), "tours:5");
  EXPECT_EQ(HomogeneousSpace::group(3).id(), "group:3");
  EXPECT_THROW(HomogeneousSpace::tabloids({26, 26}).checked_size(), CapExceeded);
  EXPECT_THROW(HomogeneousSpace::tours(2), DomainError);
}

TEST(Space, RankIsABijection) {
  for (const auto& x : small_spaces()) {
    const auto pts = x.enumerate();
    ASSERT_EQ(BigInt(pts.size()), x.size()) << x.id();
    std::set<State> distinct(pts.begin(), pts.end());
    EXPECT_EQ(distinct.size(), pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_TRUE(x.is_valid(pts[i]));
      EXPECT_EQ(x.rank(pts[i]), i);
      EXPECT_EQ(x.unrank(i), pts[i]);
    }
  }
}

TEST(Space, ActionIsAGroupAction) {
  for (const auto& x : small_spaces()) {
    const auto group = enumerate_group(x.n());
    const auto pts = x.enumerate();
    for (std::size_t gi = 0; gi < group.size(); gi += 3) {
      for (std::size_t hi = 0; hi < group.size(); hi += 5) {
        for (const auto& p : pts) {
          EXPECT_EQ(x.act(group[gi] * group[hi], p), x.act(group[gi], x.act(group[hi], p)));
        }
      }
    }
    for (const auto& p : pts) EXPECT_EQ(x.act(Permutation::identity(x.n()), p), p);
  }
}

TEST(Space, ActionIsTransitive) {
  for (const auto& x : small_spaces()) {
    std::set<State> orbit;
    for (const auto& g : enumerate_group(x.n())) orbit.insert(x.act(g, x.base_point()));
    EXPECT_EQ(BigInt(orbit.size()), x.size()) << x.id();
  }
}

TEST(Space, TabloidIndexingOfTheSmallExample) {
  const auto x = HomogeneousSpace::tabloids({2, 1});
  EXPECT_EQ(x.unrank(0), (State{1, 0, 0}));
  EXPECT_EQ(x.unrank(1), (State{0, 1, 0}));
  EXPECT_EQ(x.unrank(2), (State{0, 0, 1}));
}

TEST(Space, ActionMatricesOfTheExampleDistributions) {
  const auto x = HomogeneousSpace::tabloids({2, 1});
  const Eigen::MatrixXd m1 = Eigen::MatrixXd(action_matrix(symwalk::testing::load_q(1), x));
  const Eigen::MatrixXd m2 = Eigen::MatrixXd(action_matrix(symwalk::testing::load_q(2), x));
  Eigen::Matrix3d e1;
  e1 << 3, 2, 3, 3, 3, 2, 2, 3, 3;
  Eigen::Matrix3d e2;
  e2 << 2, 2, 4, 3, 3, 2, 3, 3, 2;
  EXPECT_LT((m1 - e1 / 8.0).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((m2 - e2 / 8.0).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Space, MultiplicitiesDecomposeThePermutationModule) {
  for (const auto& x : small_spaces()) {
    BigInt total = 0;
    for (const auto& [lambda, m] : x.multiplicities()) total += m * dim_irrep(lambda);
    EXPECT_EQ(total, x.size()) << x.id();
    EXPECT_EQ(x.multiplicities().at(Partition::row(x.n())), 1);
  }
}

TEST(Space, TourMultiplicityByCharacterAverage) {
  // compare (1/n) sum_k chi(c^k) with a count over the explicit stabilizer
  for (int n : {3, 4, 5, 6, 7}) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    const auto c = Permutation::cycle(n, all);
    std::vector<Permutation> h{Permutation::identity(n)};
    for (int k = 1; k < n; ++k) h.push_back(c * h.back());
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(tours_multiplicity(n, lambda), frobenius_reciprocity_multiplicity(lambda, h))
          << n << " " << lambda.to_string();
    }
  }
}

TEST(Space, GroupSpaceIsTheRegularRepresentation) {
  const auto m = HomogeneousSpace::group(4).multiplicities();
  for (const auto& lambda : partitions_of(4)) EXPECT_EQ(m.at(lambda), dim_irrep(lambda));
}
