#include "symwalk/errors.hpp"
#include "symwalk/walks.hpp"

namespace symwalk {

namespace {

void check_word(const std::vector<int>& word, std::size_t m) {
  for (int letter : word) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= m) {
      throw DomainError("word letter " + std::to_string(letter) + " out of range");
    }
  }
}

}  // namespace

StateDistribution switched_exact_distribution(const std::vector<GroupDistribution>& qs,
                                              const std::vector<int>& word,
                                              const HomogeneousSpace& x,
                                              std::uint64_t x0, std::size_t cap) {
  check_word(word, qs.size());
  std::vector<Eigen::SparseMatrix<double>> ts;
  for (const auto& q : qs) ts.push_back(action_matrix(q, x, cap));
  StateDistribution s = point_state(x, x0, cap);
  for (int letter : word) s.probs = ts[static_cast<std::size_t>(letter)] * s.probs;
  return s;
}

SwitchedWorstCase switched_worst_case_tv(const std::vector<GroupDistribution>& qs,
                                         const HomogeneousSpace& x, int N,
                                         std::uint64_t word_budget, std::size_t cap) {
  if (qs.empty()) throw DomainError("switched_worst_case_tv: no distributions");
  if (N < 0) throw DomainError("negative step count");
  const std::uint64_t m = qs.size();
  std::uint64_t words = 1;
  for (int i = 0; i < N; ++i) {
    if (words > word_budget / m) {
      throw BudgetExceeded("switched enumeration: " + std::to_string(m) + "^" +
                           std::to_string(N) + " words exceed the budget " +
                           std::to_string(word_budget));
    }
    words *= m;
  }

  std::vector<Eigen::MatrixXd> ts;
  for (const auto& q : qs) ts.emplace_back(action_matrix(q, x, cap));
  const auto size = static_cast<Eigen::Index>(x.checked_size(cap));

  // prefix[k] = T_{w_k} ... T_{w_1}
  std::vector<Eigen::MatrixXd> prefix(static_cast<std::size_t>(N) + 1);
  prefix[0] = Eigen::MatrixXd::Identity(size, size);
  std::vector<int> word(static_cast<std::size_t>(N), 0);
  SwitchedWorstCase best;
  best.max_tv = -1.0;

  auto leaf = [&]() {
    const Eigen::MatrixXd& p = prefix[static_cast<std::size_t>(N)];
    for (Eigen::Index c = 0; c < size; ++c) {
      const double tv = tv_to_uniform(p.col(c));
      if (tv > best.max_tv) {
        best.max_tv = tv;
        best.word = word;
        best.state = static_cast<std::uint64_t>(c);
      }
    }
    ++best.words;
  };
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == N) {
      leaf();
      return;
    }
    for (std::uint64_t letter = 0; letter < m; ++letter) {
      word[static_cast<std::size_t>(depth)] = static_cast<int>(letter);
      prefix[static_cast<std::size_t>(depth) + 1].noalias() =
          ts[letter] * prefix[static_cast<std::size_t>(depth)];
      self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace symwalk
