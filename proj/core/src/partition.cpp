#include "symwalk/partition.hpp"

#include "symwalk/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace symwalk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be nonincreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) { return Partition(std::vector<int>{n}); }

Partition Partition::column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::two_row(int a, int b) {
  if (a < b || b < 0) throw DomainError("two-row shape needs a >= b >= 0");
  return Partition(std::vector<int>{a, b});
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>((*this)[0]), 0);
  for (int part : parts_) {
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

bool Partition::is_hook() const {
  return parts_.size() <= 1 || parts_[1] <= 1;
}

int Partition::hook(int r, int c) const {
  const int arm = (*this)[r] - c - 1;
  int leg = 0;
  for (int rr = r + 1; rr < length() && (*this)[rr] > c; ++rr) ++leg;
  return arm + leg + 1;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DomainError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(v);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void dominating_rec(const std::vector<int>& mu_prefix, int n, int max_part,
                    std::vector<int>& cur, int sum, std::vector<Partition>& out) {
  if (sum == n) {
    out.emplace_back(cur);
    return;
  }
  const std::size_t j = cur.size();
  const int need = j < mu_prefix.size() ? mu_prefix[j] : n;
  for (int p = std::min(n - sum, max_part); p >= 1 && sum + p >= need; --p) {
    cur.push_back(p);
    dominating_rec(mu_prefix, n, p, cur, sum + p, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_dominating(const Partition& mu) {
  std::vector<int> prefix;
  int s = 0;
  for (int part : mu.parts()) prefix.push_back(s += part);
  std::vector<Partition> out;
  std::vector<int> cur;
  dominating_rec(prefix, mu.n(), mu.n(), cur, 0, out);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw DomainError("dominance_leq: partitions of different integers");
  }
  int sl = 0;
  int sm = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl > sm) return false;
  }
  return true;
}

}  // namespace symwalk
