#include "symwalk/errors.hpp"
#include "symwalk/walks.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace symwalk {

unsigned worker_threads() {
  if (const char* env = std::getenv("SYMWALK_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

State walk_endpoint(const PermutationSampler& q, const HomogeneousSpace& x,
                    const State& x0, int N, RandomStream& rng) {
  State s = x0;
  for (int i = 0; i < N; ++i) s = x.act(q.sample(rng), s);
  return s;
}

EmpiricalDistribution simulate_walk(const PermutationSampler& q,
                                    const HomogeneousSpace& x, const State& x0, int N,
                                    std::uint64_t seed, std::uint64_t M,
                                    unsigned threads) {
  if (q.n() != x.n()) throw DomainError("simulate_walk: degree mismatch");
  if (!x.is_valid(x0)) throw DomainError("simulate_walk: invalid starting point");
  if (N < 0) throw DomainError("negative step count");
  if (threads == 0) threads = worker_threads();
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, M)));

  std::vector<std::map<State, std::uint64_t>> partial(threads);
  auto work = [&](unsigned t) {
    const std::uint64_t lo = M * t / threads;
    const std::uint64_t hi = M * (t + 1) / threads;
    for (std::uint64_t r = lo; r < hi; ++r) {
      RandomStream rng(seed, r);
      ++partial[t][walk_endpoint(q, x, x0, N, rng)];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  EmpiricalDistribution out;
  out.space_id = x.id();
  out.N = N;
  out.M = M;
  out.seed = seed;
  for (const auto& part : partial) {
    for (const auto& [s, c] : part) out.counts[s] += c;
  }
  return out;
}

StateDistribution EmpiricalDistribution::to_state_distribution(const HomogeneousSpace& x,
                                                               std::size_t cap) const {
  if (x.id() != space_id) throw DomainError("empirical distribution space mismatch");
  const std::size_t m = x.checked_size(cap);
  StateDistribution s{space_id, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m))};
  for (const auto& [state, c] : counts) {
    s.probs(static_cast<Eigen::Index>(x.rank(state))) +=
        static_cast<double>(c) / static_cast<double>(M);
  }
  return s;
}

}  // namespace symwalk
