#pragma once

// Combinatorial representation theory of S_n: Kostka numbers, Young's rule,
// exact characters and dimensions.

#include "symwalk/bigint.hpp"
#include "symwalk/group.hpp"
#include "symwalk/partition.hpp"

#include <map>
#include <span>
#include <vector>

namespace symwalk {

/// Ordered set partition of {0..n-1}: rows[i] holds shape[i] indices.
struct Tabloid {
  Partition shape;
  std::vector<std::vector<int>> rows;  // each row sorted ascending

  /// Validates disjointness, coverage and row sizes; sorts each row.
  static Tabloid from_rows(std::vector<std::vector<int>> rows);
  /// word[x] = row containing x.
  static Tabloid from_word(const Partition& shape, std::span<const int> word);
  std::vector<int> word() const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

/// Number of semistandard tableaux of shape lambda and content mu.
BigInt kostka(const Partition& lambda, const Partition& mu);

/// Multiplicity of each irreducible S^lambda in the permutation module M^mu
/// (Young's rule). Only nonzero entries are present.
std::map<Partition, BigInt> young_rule_multiplicities(const Partition& mu);

/// chi_lambda on the class c, by the Murnaghan-Nakayama rule. Exact.
/// Safe to call concurrently; results are memoized process-wide.
BigInt character_mn(const Partition& lambda, const CycleType& c);

/// Two-row character on the k-cycle class, from the binomial identity
///   [C(n-k,a) - C(n-k,a+1)] + [C(n-k,b) - C(n-k,b-1)].
BigInt character_two_row(int a, int b, int k);

/// Hook-length formula.
BigInt dim_irrep(const Partition& lambda);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> shapes;   // partitions_of(n) order
  std::vector<CycleType> classes;  // all_cycle_types(n) order
  std::vector<std::vector<BigInt>> values;  // values[shape][class]

  const BigInt& at(const Partition& lambda, const CycleType& c) const;
};

CharacterTable character_table(int n);

/// (1/|H|) sum_{h in H} chi_lambda(h). H must be closed under composition
/// and inverses (checked); throws Error if the average is not an integer.
BigInt frobenius_reciprocity_multiplicity(const Partition& lambda,
                                          std::span<const Permutation> H);

}  // namespace symwalk
