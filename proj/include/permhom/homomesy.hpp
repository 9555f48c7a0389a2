#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "permhom/maps.hpp"
#include "permhom/orbit_engine.hpp"
#include "permhom/rational.hpp"
#include "permhom/statistics.hpp"

namespace permhom {

struct OrbitSummary {
  Permutation seed;  // first member of the orbit
  std::size_t size;
  Rational average;
};

struct Homomesic {
  Rational constant;
};

/// The first orbit in canonical order, and the first later orbit whose
/// average differs from it.
struct NotHomomesic {
  OrbitSummary first;
  OrbitSummary second;
};

struct HomomesyVerdict {
  std::variant<Homomesic, NotHomomesic> outcome;
  std::size_t orbit_count = 0;

  bool is_homomesic() const noexcept { return std::holds_alternative<Homomesic>(outcome); }
  /// Throws std::bad_variant_access for a negative verdict.
  const Rational& constant() const { return std::get<Homomesic>(outcome).constant; }
  const NotHomomesic& witnesses() const { return std::get<NotHomomesic>(outcome); }
};

/// A statistic sum_i w_i * st_i + offset with rational weights.
struct LinearCombination {
  std::vector<std::pair<StatisticId, Rational>> terms;
  Rational offset = 0;

  Rational evaluate(const Permutation& p) const;
};

/// Exact mean of a statistic over the members of an orbit.
Rational orbit_average(const StatisticId& id, const Orbit& orbit);

HomomesyVerdict check_homomesy(int n, const OrbitGenerator& gen, const StatisticId& id,
                               const EngineOptions& options = {});

/// One verdict per id, sharing a single pass over the orbits.
std::vector<HomomesyVerdict> survey(int n, const OrbitGenerator& gen, std::span<const StatisticId> ids,
                                    const EngineOptions& options = {});

HomomesyVerdict check_linear_combination(const LinearCombination& combination, int n, const OrbitGenerator& gen,
                                         const EngineOptions& options = {});

/// Mean of a statistic over all of S_n.
Rational global_average(int n, const StatisticId& id, int max_n = kDefaultEnumerationGuard);

/// sum_{k=1}^{n} (fp(p * c^k) - 1) for an n-cycle c. Always zero.
/// Throws std::invalid_argument unless c is an n-cycle of the same size as p.
Integer reflection_trace_cycle_sum(const Permutation& p, const Permutation& cycle);

}  // namespace permhom
