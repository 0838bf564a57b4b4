#include "symwalk/group.hpp"

#include "symwalk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace symwalk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw DomainError("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  const int e[2] = {a, b};
  return cycle(n, e);
}

Permutation Permutation::cycle(int n, std::span<const int> elements) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int from = elements[i];
    const int to = elements[(i + 1) % elements.size()];
    if (from < 0 || from >= n) throw DomainError("cycle element out of range");
    v[static_cast<std::size_t>(from)] = to;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::sign() const {
  int parity = 0;
  for (const auto& c : cycles()) parity += static_cast<int>(c.size()) - 1;
  return parity % 2 == 0 ? 1 : -1;
}

std::size_t Permutation::inversions() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++inv;
    }
  }
  return inv;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)];
         x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("compose: degree mismatch (" +
                      std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()) + ")");
  }
  std::vector<int> r(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) r[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(r));
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  return compose(compose(g, h), g.inverse());
}

namespace {

std::vector<int> parse_int_list(std::string_view body, char sep) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) ||
                               body[i] == sep)) {
      ++i;
    }
  };
  skip();
  while (i < body.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
    if (ec != std::errc()) throw DomainError("malformed permutation text");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - body.data());
    if (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) &&
        body[i] != sep) {
      throw DomainError("malformed permutation text");
    }
    skip();
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw DomainError("empty permutation text");

  if (text.front() == '[') {
    if (text.back() != ']') throw DomainError("unterminated one-line permutation");
    Permutation p(parse_int_list(text.substr(1, text.size() - 2), ','));
    if (n >= 0 && p.degree() != n) throw DomainError("permutation degree mismatch");
    return p;
  }

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_index = -1;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw DomainError("expected '(' in cycle notation");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw DomainError("unterminated cycle");
    auto c = parse_int_list(text.substr(i + 1, close - i - 1), ',');
    for (int v : c) max_index = std::max(max_index, v);
    cycles.push_back(std::move(c));
    i = close + 1;
  }
  const int degree = n >= 0 ? n : max_index + 1;
  Permutation result = Permutation::identity(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 0 || v >= degree) throw DomainError("cycle element out of range");
      if (used[static_cast<std::size_t>(v)]) {
        throw DomainError("cycles in permutation text are not disjoint");
      }
      used[static_cast<std::size_t>(v)] = 1;
    }
    result = compose(Permutation::cycle(degree, c), result);
  }
  return result;
}

CycleType::CycleType(std::vector<int> counts) : counts_(std::move(counts)) {
  long total = 0;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (counts_[j] < 0) throw DomainError("negative cycle count");
    total += static_cast<long>(j + 1) * counts_[j];
  }
  if (total != static_cast<long>(counts_.size())) {
    throw DomainError("cycle counts do not sum to the degree");
  }
}

CycleType CycleType::from_lengths(int n, std::span<const int> lengths) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  int total = 0;
  for (int l : lengths) {
    if (l < 1 || l > n) throw DomainError("cycle length out of range");
    ++counts[static_cast<std::size_t>(l - 1)];
    total += l;
  }
  if (total > n) throw DomainError("cycle lengths exceed the degree");
  counts[0] += n - total;  // pad with fixed points
  return CycleType(std::move(counts));
}

CycleType CycleType::from_partition(const Partition& p) {
  return from_lengths(p.n(), p.parts());
}

CycleType CycleType::k_cycle(int n, int k) {
  if (k < 1 || k > n) throw DomainError("k-cycle needs 1 <= k <= n");
  const int l[1] = {k};
  return from_lengths(n, l);
}

CycleType CycleType::identity(int n) { return from_lengths(n, {}); }

std::vector<int> CycleType::lengths() const {
  std::vector<int> out;
  for (int j = n(); j >= 1; --j) {
    for (int c = 0; c < count(j); ++c) out.push_back(j);
  }
  return out;
}

Permutation CycleType::representative() const {
  std::vector<int> images(static_cast<std::size_t>(n()));
  int next = 0;
  for (int len : lengths()) {
    for (int i = 0; i < len; ++i) {
      images[static_cast<std::size_t>(next + i)] = next + (i + 1) % len;
    }
    next += len;
  }
  return Permutation(std::move(images));
}

std::string CycleType::to_string() const { return to_partition().to_string(); }

CycleType cycle_type(const Permutation& p) {
  std::vector<int> counts(static_cast<std::size_t>(p.degree()), 0);
  for (const auto& c : p.cycles()) ++counts[c.size() - 1];
  return CycleType(std::move(counts));
}

std::vector<Permutation> enumerate_group(int n, int limit) {
  if (n < 0) throw DomainError("negative degree");
  if (n > limit) {
    throw CapExceeded("enumerate_group: degree " + std::to_string(n) +
                      " exceeds the exhaustive limit " + std::to_string(limit));
  }
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

BigInt conjugacy_class_size(const CycleType& t) {
  BigInt denom = 1;
  for (int j = 1; j <= t.n(); ++j) {
    const int c = t.count(j);
    for (int i = 0; i < c; ++i) denom *= j;
    denom *= factorial(c);
  }
  return factorial(t.n()) / denom;
}

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<CycleType> out;
  for (const auto& p : partitions_of(n)) out.push_back(CycleType::from_partition(p));
  return out;
}

namespace {

// Builds each class element once: the smallest unused point opens a cycle of
// some remaining length; the other members of that cycle are chosen in order.
void class_rec(std::vector<int>& images, std::vector<char>& used,
               std::vector<int>& remaining_counts, int n,
               std::vector<Permutation>& out, std::size_t cap) {
  int start = 0;
  while (start < n && used[static_cast<std::size_t>(start)]) ++start;
  if (start == n) {
    if (out.size() >= cap) throw CapExceeded("conjugacy class exceeds cap");
    out.emplace_back(images);
    return;
  }
  for (int len = 1; len <= n; ++len) {
    if (remaining_counts[static_cast<std::size_t>(len - 1)] == 0) continue;
    --remaining_counts[static_cast<std::size_t>(len - 1)];
    std::vector<int> members{start};
    used[static_cast<std::size_t>(start)] = 1;
    // depth-first choice of the remaining len-1 members
    auto choose = [&](auto&& self) -> void {
      if (static_cast<int>(members.size()) == len) {
        for (std::size_t i = 0; i < members.size(); ++i) {
          images[static_cast<std::size_t>(members[i])] =
              members[(i + 1) % members.size()];
        }
        class_rec(images, used, remaining_counts, n, out, cap);
        return;
      }
      for (int x = start + 1; x < n; ++x) {
        if (used[static_cast<std::size_t>(x)]) continue;
        used[static_cast<std::size_t>(x)] = 1;
        members.push_back(x);
        self(self);
        members.pop_back();
        used[static_cast<std::size_t>(x)] = 0;
      }
    };
    choose(choose);
    used[static_cast<std::size_t>(start)] = 0;
    ++remaining_counts[static_cast<std::size_t>(len - 1)];
  }
}

}  // namespace

std::vector<Permutation> enumerate_class(const CycleType& t,
                                         std::size_t max_elements) {
  if (conjugacy_class_size(t) > max_elements) {
    throw CapExceeded("conjugacy class " + t.to_string() + " has more than " +
                      std::to_string(max_elements) + " elements");
  }
  const int n = t.n();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> counts = t.counts();
  std::vector<Permutation> out;
  class_rec(images, used, counts, n, out, max_elements);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t lehmer_rank(const Permutation& p) {
  const int n = p.degree();
  if (n > 20) throw CapExceeded("lehmer_rank: degree above 20");
  std::uint64_t rank = 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::uint64_t fact = 1;
  std::vector<std::uint64_t> facts(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) facts[static_cast<std::size_t>(i)] = fact *= static_cast<std::uint64_t>(i);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < p(i); ++v) {
      if (!used[static_cast<std::size_t>(v)]) ++smaller;
    }
    used[static_cast<std::size_t>(p(i))] = 1;
    rank += static_cast<std::uint64_t>(smaller) *
            facts[static_cast<std::size_t>(n - 1 - i)];
  }
  return rank;
}

Permutation lehmer_unrank(int n, std::uint64_t rank) {
  if (n > 20) throw CapExceeded("lehmer_unrank: degree above 20");
  std::vector<std::uint64_t> facts(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) {
    facts[static_cast<std::size_t>(i)] =
        facts[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  }
  if (rank >= facts[static_cast<std::size_t>(n)]) throw DomainError("rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = facts[static_cast<std::size_t>(i)];
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(images));
}

}  // namespace symwalk
