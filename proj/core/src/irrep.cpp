#include "symwalk/irrep.hpp"

#include "symwalk/errors.hpp"
#include "symwalk/symrep.hpp"

#include <cmath>

namespace symwalk {

namespace {

void syt_rec(const Partition& lambda, std::vector<int>& fill, std::vector<int>& word,
             std::vector<std::vector<int>>& out) {
  const std::size_t k = word.size();
  if (static_cast<int>(k) == lambda.n()) {
    out.push_back(word);
    return;
  }
  for (int r = 0; r < lambda.length(); ++r) {
    const int c = fill[static_cast<std::size_t>(r)];
    if (c >= lambda[r]) continue;
    if (r > 0 && fill[static_cast<std::size_t>(r - 1)] <= c) continue;
    ++fill[static_cast<std::size_t>(r)];
    word.push_back(r);
    syt_rec(lambda, fill, word, out);
    word.pop_back();
    --fill[static_cast<std::size_t>(r)];
  }
}

}  // namespace

std::vector<std::vector<int>> standard_tableaux(const Partition& lambda) {
  std::vector<std::vector<int>> out;
  std::vector<int> fill(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<int> word;
  syt_rec(lambda, fill, word, out);
  return out;
}

Irrep::Irrep(const Partition& shape, std::size_t dim_cap) : shape_(shape) {
  const BigInt d = dim_irrep(shape);
  if (d > dim_cap) {
    throw CapExceeded("irrep " + shape.to_string() + " has dimension " + d.str() +
                      " above the cap " + std::to_string(dim_cap));
  }
  tableaux_ = standard_tableaux(shape);
  std::map<std::vector<int>, int> index;
  for (std::size_t t = 0; t < tableaux_.size(); ++t) {
    index.emplace(tableaux_[t], static_cast<int>(t));
  }

  // content c(k) = column - row of entry k
  std::vector<std::vector<int>> content(tableaux_.size());
  for (std::size_t t = 0; t < tableaux_.size(); ++t) {
    std::vector<int> seen(static_cast<std::size_t>(shape.length()), 0);
    for (int row : tableaux_[t]) {
      content[t].push_back(seen[static_cast<std::size_t>(row)]++ - row);
    }
  }

  const int n = shape.n();
  for (int i = 0; i + 1 < n; ++i) {
    Generator g;
    g.diag.resize(tableaux_.size());
    g.off.assign(tableaux_.size(), 0.0);
    g.partner.assign(tableaux_.size(), -1);
    for (std::size_t t = 0; t < tableaux_.size(); ++t) {
      const auto ii = static_cast<std::size_t>(i);
      const int axial = content[t][ii + 1] - content[t][ii];
      g.diag[t] = 1.0 / axial;
      if (axial == 1 || axial == -1) continue;
      std::vector<int> swapped = tableaux_[t];
      std::swap(swapped[ii], swapped[ii + 1]);
      g.partner[t] = index.at(swapped);
      g.off[t] = std::sqrt(1.0 - 1.0 / (static_cast<double>(axial) * axial));
    }
    gens_.push_back(std::move(g));
  }
}

void Irrep::apply_adjacent(int i, Eigen::MatrixXd& m) const {
  const Generator& g = gens_.at(static_cast<std::size_t>(i));
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int t = 0; t < dim(); ++t) {
    const auto ut = static_cast<std::size_t>(t);
    out.row(t) = g.diag[ut] * m.row(t);
    if (g.partner[ut] >= 0) out.row(t) += g.off[ut] * m.row(g.partner[ut]);
  }
  m.swap(out);
}

Eigen::MatrixXd Irrep::adjacent(int i) const {
  if (i < 0 || i + 1 >= n()) throw DomainError("adjacent transposition index out of range");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim(), dim());
  apply_adjacent(i, m);
  return m;
}

Eigen::MatrixXd Irrep::matrix(const Permutation& g) const {
  if (g.degree() != n()) throw DomainError("irrep degree mismatch");
  // Bubble-sort g: each swap at a descent right-multiplies cur by s_i, so
  // g = s_{i_k} ... s_{i_1} and rho(g) accumulates on the left.
  std::vector<int> cur(g.images().begin(), g.images().end());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim(), dim());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (cur[ui] > cur[ui + 1]) {
        std::swap(cur[ui], cur[ui + 1]);
        apply_adjacent(i, m);
        changed = true;
      }
    }
  }
  return m;
}

}  // namespace symwalk
