#include "symwalk/symrep.hpp"

#include "symwalk/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

namespace symwalk {

Tabloid Tabloid::from_rows(std::vector<std::vector<int>> rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  std::vector<char> seen(n, 0);
  std::vector<int> sizes;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    for (int x : r) {
      if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)]) {
        throw DomainError("tabloid rows must partition {0..n-1}");
      }
      seen[static_cast<std::size_t>(x)] = 1;
    }
    sizes.push_back(static_cast<int>(r.size()));
  }
  Tabloid t;
  t.shape = Partition(sizes);
  if (t.shape.length() != static_cast<int>(rows.size())) {
    throw DomainError("tabloid rows must be nonempty");
  }
  t.rows = std::move(rows);
  return t;
}

Tabloid Tabloid::from_word(const Partition& shape, std::span<const int> word) {
  if (static_cast<int>(word.size()) != shape.n()) {
    throw DomainError("tabloid word length differs from the shape size");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  for (std::size_t x = 0; x < word.size(); ++x) {
    if (word[x] < 0 || word[x] >= shape.length()) {
      throw DomainError("tabloid word entry out of range");
    }
    rows[static_cast<std::size_t>(word[x])].push_back(static_cast<int>(x));
  }
  for (int i = 0; i < shape.length(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != shape[i]) {
      throw DomainError("tabloid word does not match the shape");
    }
  }
  Tabloid t;
  t.shape = shape;
  t.rows = std::move(rows);
  return t;
}

std::vector<int> Tabloid::word() const {
  std::vector<int> w(static_cast<std::size_t>(shape.n()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int x : rows[i]) w[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  return w;
}

// --- Kostka numbers ------------------------------------------------------

namespace {

// Peels horizontal strips of size mu[i], mu[i-1], ..., mu[0] off shape.
class KostkaCounter {
 public:
  explicit KostkaCounter(const Partition& mu) : mu_(mu.parts()) {}

  BigInt count(const std::vector<int>& shape, int i) {
    if (i < 0) return shape.empty() ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(shape, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // a semistandard filling has at most i+1 distinct entries in a column
    BigInt total = 0;
    if (static_cast<int>(shape.size()) <= i + 1) {
      std::vector<int> inner(shape.size());
      strips(shape, inner, 0, mu_[static_cast<std::size_t>(i)], i, total);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  void strips(const std::vector<int>& outer, std::vector<int>& inner,
              std::size_t row, int remaining, int i, BigInt& total) {
    if (row == outer.size()) {
      if (remaining != 0) return;
      std::vector<int> next = inner;
      while (!next.empty() && next.back() == 0) next.pop_back();
      total += count(next, i - 1);
      return;
    }
    const int below = row + 1 < outer.size() ? outer[row + 1] : 0;
    // inner[row] in [below, outer[row]]
    for (int v = outer[row]; v >= below; --v) {
      const int removed = outer[row] - v;
      if (removed > remaining) break;
      inner[row] = v;
      strips(outer, inner, row + 1, remaining - removed, i, total);
    }
  }

  std::vector<int> mu_;
  std::map<std::pair<std::vector<int>, int>, BigInt> memo_;
};

}  // namespace

BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) return 0;
  if (!dominance_leq(mu, lambda)) return 0;
  KostkaCounter counter(mu);
  return counter.count(lambda.parts(), mu.length() - 1);
}

std::map<Partition, BigInt> young_rule_multiplicities(const Partition& mu) {
  std::map<Partition, BigInt> out;
  for (const auto& lambda : partitions_dominating(mu)) {
    BigInt k = kostka(lambda, mu);
    if (k != 0) out.emplace(lambda, std::move(k));
  }
  return out;
}

// --- characters ----------------------------------------------------------

BigInt dim_irrep(const Partition& lambda) {
  BigInt hooks = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) hooks *= lambda.hook(r, c);
  }
  return factorial(lambda.n()) / hooks;
}

namespace {

struct CharKey {
  std::vector<int> parts;
  std::vector<int> lengths;  // remaining cycle lengths, nonincreasing
  auto operator<=>(const CharKey&) const = default;
};

std::mutex g_char_mutex;
std::map<CharKey, BigInt> g_char_memo;

BigInt mn_rec(const std::vector<int>& parts, const std::vector<int>& lengths,
              std::size_t pos);

BigInt mn_memo(const std::vector<int>& parts, const std::vector<int>& lengths,
               std::size_t pos) {
  // only fixed points left: chi = number of standard tableaux
  if (pos == lengths.size() || lengths[pos] == 1) {
    return dim_irrep(Partition(parts));
  }
  CharKey key{parts, std::vector<int>(lengths.begin() + static_cast<std::ptrdiff_t>(pos),
                                      lengths.end())};
  {
    std::lock_guard lock(g_char_mutex);
    if (auto it = g_char_memo.find(key); it != g_char_memo.end()) return it->second;
  }
  BigInt v = mn_rec(parts, lengths, pos);
  std::lock_guard lock(g_char_mutex);
  g_char_memo.emplace(std::move(key), v);
  return v;
}

BigInt mn_rec(const std::vector<int>& parts, const std::vector<int>& lengths,
              std::size_t pos) {
  const int r = lengths[pos];
  const int len = static_cast<int>(parts.size());
  // beta-set: beta_i = parts_i + (len - 1 - i), strictly decreasing
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;
  std::set<int> beads(beta.begin(), beta.end());

  BigInt total = 0;
  for (int x : beta) {
    const int y = x - r;
    if (y < 0 || beads.count(y)) continue;
    int between = 0;
    for (int b : beta) {
      if (b > y && b < x) ++between;
    }
    std::vector<int> nb = beta;
    std::replace(nb.begin(), nb.end(), x, y);
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> np(nb.size());
    for (int i = 0; i < len; ++i) np[static_cast<std::size_t>(i)] = nb[static_cast<std::size_t>(i)] - (len - 1 - i);
    while (!np.empty() && np.back() == 0) np.pop_back();
    BigInt sub = mn_memo(np, lengths, pos + 1);
    if (between % 2) total -= sub; else total += sub;
  }
  return total;
}

}  // namespace

BigInt character_mn(const Partition& lambda, const CycleType& c) {
  if (lambda.n() != c.n()) {
    throw DomainError("character_mn: shape and class have different degrees");
  }
  return mn_memo(lambda.parts(), c.lengths(), 0);
}

BigInt character_two_row(int a, int b, int k) {
  if (b < 0 || a < b) throw DomainError("character_two_row: need a >= b >= 0");
  const int n = a + b;
  if (k < 1 || k > n) throw DomainError("character_two_row: need 1 <= k <= n");
  const int m = n - k;
  return (binomial(m, a) - binomial(m, a + 1)) + (binomial(m, b) - binomial(m, b - 1));
}

const BigInt& CharacterTable::at(const Partition& lambda, const CycleType& c) const {
  const auto si = std::find(shapes.begin(), shapes.end(), lambda);
  const auto ci = std::find(classes.begin(), classes.end(), c);
  if (si == shapes.end() || ci == classes.end()) {
    throw DomainError("character table lookup outside S_" + std::to_string(n));
  }
  return values[static_cast<std::size_t>(si - shapes.begin())]
               [static_cast<std::size_t>(ci - classes.begin())];
}

CharacterTable character_table(int n) {
  CharacterTable t;
  t.n = n;
  t.shapes = partitions_of(n);
  t.classes = all_cycle_types(n);
  for (const auto& lambda : t.shapes) {
    std::vector<BigInt> row;
    for (const auto& c : t.classes) row.push_back(character_mn(lambda, c));
    t.values.push_back(std::move(row));
  }
  return t;
}

BigInt frobenius_reciprocity_multiplicity(const Partition& lambda,
                                          std::span<const Permutation> H) {
  if (H.empty()) throw DomainError("subgroup must be nonempty");
  std::unordered_set<Permutation> members(H.begin(), H.end());
  if (members.size() != H.size()) throw DomainError("subgroup list has duplicates");
  for (const auto& h : H) {
    if (h.degree() != lambda.n()) throw DomainError("subgroup degree mismatch");
    if (!members.count(h.inverse())) throw DomainError("element list is not a subgroup");
    for (const auto& g : H) {
      if (!members.count(compose(h, g))) throw DomainError("element list is not a subgroup");
    }
  }
  std::map<CycleType, BigInt> by_class;
  for (const auto& h : H) ++by_class[cycle_type(h)];
  BigInt sum = 0;
  for (const auto& [c, count] : by_class) sum += count * character_mn(lambda, c);
  const BigInt order = static_cast<unsigned long>(H.size());
  if (sum % order != 0) {
    throw Error("Frobenius reciprocity average " + sum.str() + "/" + order.str() +
                " is not an integer");
  }
  return sum / order;
}

}  // namespace symwalk
