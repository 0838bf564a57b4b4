#include "symwalk/space.hpp"

#include "symwalk/errors.hpp"
#include "symwalk/symrep.hpp"

#include <algorithm>
#include <numeric>

namespace symwalk {

HomogeneousSpace HomogeneousSpace::tabloids(const Partition& shape) {
  if (shape.n() < 1) throw DomainError("tabloid shape must be nonempty");
  HomogeneousSpace s;
  s.kind_ = Kind::Tabloids;
  s.n_ = shape.n();
  s.shape_ = shape;
  return s;
}

HomogeneousSpace HomogeneousSpace::tours(int n) {
  if (n < 3) throw DomainError("tours need at least 3 cities");
  HomogeneousSpace s;
  s.kind_ = Kind::Tours;
  s.n_ = n;
  return s;
}

HomogeneousSpace HomogeneousSpace::group(int n) {
  if (n < 1) throw DomainError("group degree must be positive");
  HomogeneousSpace s;
  s.kind_ = Kind::Group;
  s.n_ = n;
  s.shape_ = Partition::column(n);
  return s;
}

std::string HomogeneousSpace::id() const {
  switch (kind_) {
    case Kind::Tabloids: return "tabloids:" + shape_.to_string();
    case Kind::Tours: return "tours:" + std::to_string(n_);
    case Kind::Group: return "group:" + std::to_string(n_);
  }
  return {};
}

BigInt HomogeneousSpace::size() const {
  switch (kind_) {
    case Kind::Tabloids: {
      BigInt s = factorial(n_);
      for (int p : shape_.parts()) s /= factorial(p);
      return s;
    }
    case Kind::Tours: return factorial(n_ - 1);
    case Kind::Group: return factorial(n_);
  }
  return 0;
}

std::size_t HomogeneousSpace::checked_size(std::size_t cap) const {
  const BigInt s = size();
  if (s > cap) {
    throw CapExceeded("space " + id() + " has " + s.str() + " points, above the cap " +
                      std::to_string(cap));
  }
  return static_cast<std::size_t>(s.convert_to<std::uint64_t>());
}

State HomogeneousSpace::base_point() const {
  State x(static_cast<std::size_t>(n_));
  if (kind_ == Kind::Tabloids) {
    std::size_t pos = 0;
    for (int r = 0; r < shape_.length(); ++r) {
      for (int c = 0; c < shape_[r]; ++c) x[pos++] = r;
    }
  } else {
    std::iota(x.begin(), x.end(), 0);
  }
  return x;
}

bool HomogeneousSpace::is_valid(const State& x) const {
  if (static_cast<int>(x.size()) != n_) return false;
  if (kind_ == Kind::Tabloids) {
    std::vector<int> counts(static_cast<std::size_t>(shape_.length()), 0);
    for (int r : x) {
      if (r < 0 || r >= shape_.length()) return false;
      ++counts[static_cast<std::size_t>(r)];
    }
    for (int r = 0; r < shape_.length(); ++r) {
      if (counts[static_cast<std::size_t>(r)] != shape_[r]) return false;
    }
    return true;
  }
  std::vector<char> seen(x.size(), 0);
  for (int v : x) {
    if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return kind_ != Kind::Tours || x[0] == 0;
}

State HomogeneousSpace::act(const Permutation& g, const State& x) const {
  if (g.degree() != n_) throw DomainError("action: degree mismatch");
  State y(x.size());
  switch (kind_) {
    case Kind::Tabloids:
      // g moves element x to g(x), carrying its row along
      for (int i = 0; i < n_; ++i) y[static_cast<std::size_t>(g(i))] = x[static_cast<std::size_t>(i)];
      break;
    case Kind::Tours: {
      std::size_t zero = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (g(x[i]) == 0) zero = i;
      }
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = g(x[(i + zero) % x.size()]);
      break;
    }
    case Kind::Group:
      for (int i = 0; i < n_; ++i) y[static_cast<std::size_t>(i)] = g(x[static_cast<std::size_t>(i)]);
      break;
  }
  return y;
}

namespace {

// number of distinct arrangements of a multiset with these counts
std::uint64_t multinomial(const std::vector<int>& counts) {
  int total = 0;
  std::uint64_t result = 1;
  for (int c : counts) {
    for (int i = 1; i <= c; ++i) {
      ++total;
      result = result * static_cast<std::uint64_t>(total) / static_cast<std::uint64_t>(i);
    }
  }
  return result;
}

}  // namespace

std::uint64_t HomogeneousSpace::rank(const State& x) const {
  switch (kind_) {
    case Kind::Tabloids: {
      if (size() > UINT64_MAX / static_cast<unsigned>(n_ + 1)) {
        throw CapExceeded("space " + id() + " is too large to index");
      }
      std::vector<int> counts(shape_.parts().begin(), shape_.parts().end());
      std::uint64_t r = 0;
      for (auto it = x.rbegin(); it != x.rend(); ++it) {
        for (int s = 0; s < *it; ++s) {
          if (counts[static_cast<std::size_t>(s)] == 0) continue;
          --counts[static_cast<std::size_t>(s)];
          r += multinomial(counts);
          ++counts[static_cast<std::size_t>(s)];
        }
        --counts[static_cast<std::size_t>(*it)];
      }
      return r;
    }
    case Kind::Tours: {
      std::vector<int> rest;
      for (std::size_t i = 1; i < x.size(); ++i) rest.push_back(x[i] - 1);
      return lehmer_rank(Permutation(std::move(rest)));
    }
    case Kind::Group: return lehmer_rank(Permutation(x));
  }
  return 0;
}

State HomogeneousSpace::unrank(std::uint64_t r) const {
  switch (kind_) {
    case Kind::Tabloids: {
      std::vector<int> counts(shape_.parts().begin(), shape_.parts().end());
      State rev;
      for (int pos = 0; pos < n_; ++pos) {
        for (int s = 0; s < shape_.length(); ++s) {
          if (counts[static_cast<std::size_t>(s)] == 0) continue;
          --counts[static_cast<std::size_t>(s)];
          const std::uint64_t block = multinomial(counts);
          if (r < block) {
            rev.push_back(s);
            break;
          }
          r -= block;
          ++counts[static_cast<std::size_t>(s)];
        }
      }
      if (static_cast<int>(rev.size()) != n_) throw DomainError("rank out of range");
      return State(rev.rbegin(), rev.rend());
    }
    case Kind::Tours: {
      const Permutation p = lehmer_unrank(n_ - 1, r);
      State x{0};
      for (int v : p.images()) x.push_back(v + 1);
      return x;
    }
    case Kind::Group: {
      const Permutation p = lehmer_unrank(n_, r);
      return State(p.images().begin(), p.images().end());
    }
  }
  return {};
}

std::vector<State> HomogeneousSpace::enumerate(std::size_t cap) const {
  const std::size_t m = checked_size(cap);
  std::vector<State> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(unrank(i));
  return out;
}

BigInt tours_multiplicity(int n, const Partition& lambda) {
  if (lambda.n() != n) throw DomainError("tours_multiplicity: degree mismatch");
  // c^k has gcd(k, n) cycles of length n / gcd(k, n)
  BigInt sum = 0;
  for (int k = 0; k < n; ++k) {
    const int g = std::gcd(k, n);
    std::vector<int> lengths(static_cast<std::size_t>(g), n / g);
    sum += character_mn(lambda, CycleType::from_lengths(n, lengths));
  }
  if (sum % n != 0) throw Error("tour multiplicity is not an integer");
  return sum / n;
}

std::map<Partition, BigInt> HomogeneousSpace::multiplicities() const {
  std::map<Partition, BigInt> out;
  switch (kind_) {
    case Kind::Tabloids: return young_rule_multiplicities(shape_);
    case Kind::Group:
      for (const auto& lambda : partitions_of(n_)) out.emplace(lambda, dim_irrep(lambda));
      return out;
    case Kind::Tours:
      for (const auto& lambda : partitions_of(n_)) {
        BigInt m = tours_multiplicity(n_, lambda);
        if (m != 0) out.emplace(lambda, std::move(m));
      }
      return out;
  }
  return out;
}

}  // namespace symwalk
