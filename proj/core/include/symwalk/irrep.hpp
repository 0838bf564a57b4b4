#pragma once

// Real orthogonal matrices of the irreducible representation S^lambda in
// Young's orthogonal form. The basis is the set of standard tableaux; a
// tableau is stored by its row word (word[k] = row holding entry k).

#include "symwalk/group.hpp"
#include "symwalk/partition.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <vector>

namespace symwalk {

inline constexpr std::size_t kDefaultIrrepDimCap = 1024;

/// Standard Young tableaux of shape lambda as row words, in lexicographic
/// order of the words.
std::vector<std::vector<int>> standard_tableaux(const Partition& lambda);

class Irrep {
 public:
  /// Throws CapExceeded when dim_irrep(lambda) > dim_cap.
  explicit Irrep(const Partition& shape, std::size_t dim_cap = kDefaultIrrepDimCap);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int dim() const { return static_cast<int>(tableaux_.size()); }
  const std::vector<std::vector<int>>& basis() const { return tableaux_; }

  /// Matrix of the adjacent transposition (i, i+1), 0 <= i < n-1.
  Eigen::MatrixXd adjacent(int i) const;

  /// Matrix of g; rho(p q) = rho(p) rho(q).
  Eigen::MatrixXd matrix(const Permutation& g) const;

  /// In-place M <- rho(s_i) M.
  void apply_adjacent(int i, Eigen::MatrixXd& m) const;

 private:
  struct Generator {
    std::vector<double> diag;
    std::vector<double> off;
    std::vector<int> partner;  // -1 when the swapped filling is not standard
  };

  Partition shape_;
  std::vector<std::vector<int>> tableaux_;
  std::vector<Generator> gens_;
};

}  // namespace symwalk
