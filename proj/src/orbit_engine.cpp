#include "permhom/orbit_engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permhom {

std::size_t OrbitDecomposition::total_size() const {
  return std::accumulate(orbits.begin(), orbits.end(), std::size_t{0},
                         [](std::size_t acc, const Orbit& o) { return acc + o.size(); });
}

void scan_seed_range(int n, const OrbitGenerator& gen, std::uint64_t lo, std::uint64_t hi,
                     const std::function<void(Orbit&&)>& emit) {
  if (lo >= hi) return;
  // Visited marks are only kept for ranks inside [lo, hi).
  std::vector<bool> visited(hi - lo, false);
  Permutation seed = unrank(n, lo);
  std::vector<int> word(seed.word().begin(), seed.word().end());
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (r > lo) std::next_permutation(word.begin(), word.end());
    if (visited[r - lo]) continue;
    seed = from_trusted_word(word);
    Orbit orbit = orbit_of(gen, seed);
    bool seed_is_min = true;
    for (const Permutation& member : orbit.members()) {
      if (member < seed) {
        seed_is_min = false;
        break;
      }
    }
    for (const Permutation& member : orbit.members()) {
      const std::uint64_t mr = rank(member);
      if (mr >= lo && mr < hi) visited[mr - lo] = true;
    }
    if (seed_is_min) emit(std::move(orbit));
  }
}

void for_each_orbit(int n, const OrbitGenerator& gen, const std::function<void(Orbit&&)>& visit,
                    const EngineOptions& options) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  if (n > options.max_n)
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds the guard of " + std::to_string(options.max_n));
  scan_seed_range(n, gen, 0, factorial(n), visit);
}

OrbitDecomposition decompose(int n, const OrbitGenerator& gen, const EngineOptions& options) {
  OrbitDecomposition d{n, gen, summarize_orbits(n, gen, [](const Orbit& o) { return o; }, options)};
  return d;
}

std::map<std::size_t, std::size_t> size_histogram(const OrbitDecomposition& d) {
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& orbit : d.orbits) ++histogram[orbit.size()];
  return histogram;
}

std::size_t ZetaSet::total() const { return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}); }

bool ZetaSet::is_full_square() const {
  return std::all_of(counts_.begin(), counts_.end(), [](std::size_t c) { return c == 1; });
}

ZetaSet zeta(const Orbit& orbit) {
  ZetaSet z(orbit.first().size());
  for (const Permutation& member : orbit.members())
    for (int i = 1; i <= member.size(); ++i) z.add(i, member(i));
  return z;
}

std::int64_t pair_sum_multiplicity(int n, int k) {
  if (n < 1 || k < 2 || k > 2 * n)
    throw std::out_of_range("pair sum " + std::to_string(k) + " outside [2, " + std::to_string(2 * n) + "]");
  return std::min(k - 1, 2 * n - k + 1);
}

}  // namespace permhom
