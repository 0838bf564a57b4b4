#pragma once

// Permutations of {0, ..., n-1} and conjugacy-class machinery for S_n.
//
// Convention: compose(p, q) applies q first, then p, i.e.
//   compose(p, q)(i) = p(q(i)).
// A walk step applies the newest element on the left, so after steps
// g_1, ..., g_N the state is g_N ... g_1 x_0.

#include "symwalk/bigint.hpp"
#include "symwalk/partition.hpp"

#include <compare>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symwalk {

/// Largest degree for which enumerate_group() is allowed by default.
inline constexpr int kExhaustiveDegreeLimit = 8;

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation; throws DomainError unless images is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// The cycle elements[0] -> elements[1] -> ... -> elements[0].
  static Permutation cycle(int n, std::span<const int> elements);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  std::size_t inversions() const;

  /// Disjoint cycles including fixed points; each cycle starts at its
  /// smallest element and cycles are ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  /// "[i0,i1,...]".
  std::string to_string() const;
  /// "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// p after q. Throws DomainError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// g h g^{-1}.
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Parses "[i0,i1,...]" (one-line) or "(a b c)(d e)" (0-based cycles). For
/// cycle syntax the degree is `n` when given, otherwise 1 + the largest index.
Permutation parse_permutation(std::string_view text, int n = -1);

/// Cycle type (n_1, ..., n_n), n_j = number of j-cycles.
class CycleType {
 public:
  CycleType() = default;
  /// counts[j-1] = n_j; throws unless sum j * n_j = counts.size().
  explicit CycleType(std::vector<int> counts);

  static CycleType from_lengths(int n, std::span<const int> lengths);
  static CycleType from_partition(const Partition& p);
  /// Class of a single k-cycle in S_n.
  static CycleType k_cycle(int n, int k);
  static CycleType identity(int n);

  int n() const { return static_cast<int>(counts_.size()); }
  /// n_j for j in 1..n.
  int count(int j) const { return counts_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& counts() const { return counts_; }

  /// Cycle lengths in nonincreasing order (including fixed points).
  std::vector<int> lengths() const;
  Partition to_partition() const { return Partition(lengths()); }
  Permutation representative() const;

  /// Cycle lengths joined by '+', e.g. "2+1+1".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<int> counts_;
};

CycleType cycle_type(const Permutation& p);

/// Every element of S_n in lexicographic one-line order.
/// Throws CapExceeded when n > limit.
std::vector<Permutation> enumerate_group(int n,
                                         int limit = kExhaustiveDegreeLimit);

/// n! / prod_j (j^{n_j} n_j!).
BigInt conjugacy_class_size(const CycleType& t);

/// Every cycle type of S_n, in the order of partitions_of(n).
std::vector<CycleType> all_cycle_types(int n);

/// Every element of one conjugacy class, sorted. Throws CapExceeded when
/// the class has more than max_elements members.
std::vector<Permutation> enumerate_class(const CycleType& t,
                                         std::size_t max_elements = 5'000'000);

/// Lexicographic rank of p among the n! permutations (Lehmer code).
std::uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(int n, std::uint64_t rank);

}  // namespace symwalk

template <>
struct std::hash<symwalk::Permutation> {
  std::size_t operator()(const symwalk::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};
