#pragma once

// Homogeneous spaces of S_n: tabloids of a shape, directed tours through n
// cities, and the group itself. Points are small integer vectors ("states");
// spaces small enough to enumerate also have a dense index.
//
//   tabloids  state = row-membership word, word[x] = row of x
//             index = colex rank of the word (lex rank of the reversed word)
//   tours     state = city sequence starting at city 0
//             index = Lehmer rank of state[1..]
//   group     state = one-line images of the element
//             index = Lehmer rank

#include "symwalk/bigint.hpp"
#include "symwalk/group.hpp"
#include "symwalk/partition.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symwalk {

inline constexpr std::size_t kDefaultSpaceCap = 50'000;

using State = std::vector<int>;

class HomogeneousSpace {
 public:
  enum class Kind { Tabloids, Tours, Group };

  static HomogeneousSpace tabloids(const Partition& shape);
  static HomogeneousSpace tours(int n);
  static HomogeneousSpace group(int n);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  /// Tabloid shape; (1^n) for the group and empty for tours.
  const Partition& shape() const { return shape_; }
  /// "tabloids:2+1", "tours:5", "group:3".
  std::string id() const;

  BigInt size() const;
  /// size() as an index bound; throws CapExceeded above cap.
  std::size_t checked_size(std::size_t cap = kDefaultSpaceCap) const;

  /// Canonical starting point: the tabloid with rows filled in order
  /// ({0..mu_0-1}, ...), the tour 0,1,...,n-1, or the identity.
  State base_point() const;
  State act(const Permutation& g, const State& x) const;
  bool is_valid(const State& x) const;

  std::uint64_t rank(const State& x) const;
  State unrank(std::uint64_t r) const;
  /// All points in index order; throws CapExceeded above cap.
  std::vector<State> enumerate(std::size_t cap = kDefaultSpaceCap) const;

  /// Index of g.x for the point with index x.
  std::uint64_t index_action(const Permutation& g, std::uint64_t x) const {
    return rank(act(g, unrank(x)));
  }

  /// Multiplicity of every irreducible S^lambda in the permutation module
  /// C X. Nonzero entries only.
  std::map<Partition, BigInt> multiplicities() const;

  friend bool operator==(const HomogeneousSpace& a, const HomogeneousSpace& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.shape_ == b.shape_;
  }

 private:
  Kind kind_ = Kind::Group;
  int n_ = 0;
  Partition shape_;
};

/// m(S^lambda, C X) for directed tours: the stabilizer of a tour is the
/// cyclic group of rotations, so m = (1/n) sum_k chi_lambda(c^k).
BigInt tours_multiplicity(int n, const Partition& lambda);

}  // namespace symwalk
