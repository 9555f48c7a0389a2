#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "permhom/maps.hpp"
#include "permhom/permutation.hpp"

namespace permhom {

struct EngineOptions {
  /// Threads used to scan seed ranges. Results never depend on this value.
  int workers = 1;
  /// Largest n accepted; GuardExceeded beyond it.
  int max_n = kDefaultEnumerationGuard;
};

/// All orbits of one generator on S_n.
///
/// Orbits are pairwise disjoint, cover S_n, and appear in canonical order:
/// sorted by their lexicographically smallest member, which is also the
/// orbit's first member (the seed).
struct OrbitDecomposition {
  int n;
  OrbitGenerator generator;
  std::vector<Orbit> orbits;

  std::size_t total_size() const;
};

/// Scans the seeds with lexicographic rank in [lo, hi) and emits, in rank
/// order, every orbit whose smallest member lies in that range. Disjoint
/// ranges that cover [0, n!) therefore emit every orbit exactly once.
void scan_seed_range(int n, const OrbitGenerator& gen, std::uint64_t lo, std::uint64_t hi,
                     const std::function<void(Orbit&&)>& emit);

/// Streams the canonical decomposition on the calling thread.
void for_each_orbit(int n, const OrbitGenerator& gen, const std::function<void(Orbit&&)>& visit,
                    const EngineOptions& options = {});

/// Applies `summarize` to every orbit, splitting the seed ranges across
/// `options.workers` threads. The result is in canonical orbit order.
template <typename Summarize>
auto summarize_orbits(int n, const OrbitGenerator& gen, Summarize summarize, const EngineOptions& options = {})
    -> std::vector<std::invoke_result_t<Summarize&, const Orbit&>> {
  using Summary = std::invoke_result_t<Summarize&, const Orbit&>;
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  if (n > options.max_n)
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds the guard of " + std::to_string(options.max_n));
  const std::uint64_t total = factorial(n);
  const auto workers = static_cast<std::uint64_t>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(options.workers, 1)), 1, total));

  std::vector<std::vector<Summary>> parts(workers);
  auto run = [&](std::uint64_t w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    scan_seed_range(n, gen, lo, hi, [&](Orbit&& orbit) { parts[w].push_back(summarize(orbit)); });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> threads;
      threads.reserve(workers);
      for (std::uint64_t w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
          try {
            run(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (auto& error : errors)
      if (error) std::rethrow_exception(error);
  }

  std::vector<Summary> merged;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(merged));
  return merged;
}

OrbitDecomposition decompose(int n, const OrbitGenerator& gen, const EngineOptions& options = {});

/// Orbit size -> number of orbits of that size.
std::map<std::size_t, std::size_t> size_histogram(const OrbitDecomposition& d);

/// Multiset of (position, value) pairs over the members of an orbit.
class ZetaSet {
public:
  explicit ZetaSet(int n) : n_(n), counts_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int n() const noexcept { return n_; }
  void add(int position, int value) { ++counts_[index(position, value)]; }
  std::size_t multiplicity(int position, int value) const { return counts_[index(position, value)]; }
  std::size_t total() const;
  /// True when every pair of [n]x[n] occurs exactly once.
  bool is_full_square() const;

private:
  std::size_t index(int position, int value) const {
    return static_cast<std::size_t>(position - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(value - 1);
  }

  int n_;
  std::vector<std::size_t> counts_;
};

ZetaSet zeta(const Orbit& orbit);

/// Number of (i, j) in [n]x[n] with i + j = k, i.e. min(k-1, 2n-k+1).
/// Throws std::out_of_range unless 2 <= k <= 2n.
std::int64_t pair_sum_multiplicity(int n, int k);

}  // namespace permhom
