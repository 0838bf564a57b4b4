#pragma once

// Shared fixtures for the test binaries.

#include "symwalk/distribution.hpp"
#include "symwalk/group.hpp"
#include "symwalk/io.hpp"

#include <random>
#include <string>
#include <vector>

namespace symwalk::testing {

inline std::string data_path(const std::string& name) {
  return std::string(SYMWALK_TEST_DATA_DIR) + "/" + name;
}

inline GroupDistribution load_q(int i) {
  return distribution_from_json(read_json_file(data_path("q" + std::to_string(i) + ".json")));
}

/// Random distribution on S_n with support of the given size (all of S_n
/// when support <= 0). Weights are drawn from an exponential law.
inline GroupDistribution random_distribution(int n, std::mt19937_64& rng, int support = 0) {
  auto all = enumerate_group(n);
  std::shuffle(all.begin(), all.end(), rng);
  if (support > 0 && static_cast<std::size_t>(support) < all.size()) all.resize(static_cast<std::size_t>(support));
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w;
  double total = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    w.push_back(ex(rng));
    total += w.back();
  }
  std::map<Permutation, double> m;
  for (std::size_t i = 0; i < all.size(); ++i) m[all[i]] = w[i] / total;
  return GroupDistribution(n, std::move(m), 1e-9);
}

inline Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

}  // namespace symwalk::testing
