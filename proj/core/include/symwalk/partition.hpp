#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace symwalk {

/// Integer partition of n: nonincreasing positive parts. Trailing zeros are
/// stripped on construction, so (3, 1, 0) and (3, 1) compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Single-row partition (n).
  static Partition row(int n);
  /// Single-column partition (1^n).
  static Partition column(int n);
  /// Two-row partition (a, b) with a >= b >= 0.
  static Partition two_row(int a, int b);

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  /// i-th part, zero beyond the length.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  Partition conjugate() const;
  bool is_hook() const;

  /// Hook length of the box in row r, column c (both 0-based).
  int hook(int r, int c) const;

  /// "a+b+c"; the empty partition prints as "0".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the parts; a total order used only for map keys.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "a+b+c" (whitespace tolerated). Parts must be nonincreasing.
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Partitions lambda of mu.n() with mu <= lambda in dominance order, in the
/// order of partitions_of().
std::vector<Partition> partitions_dominating(const Partition& mu);

/// Dominance order: every prefix sum of lambda is <= the matching prefix sum
/// of mu. Throws DomainError when the totals differ.
bool dominance_leq(const Partition& lambda, const Partition& mu);

}  // namespace symwalk
