#include "permhom/homomesy.hpp"

#include <stdexcept>

namespace permhom {

namespace {

struct OrbitTotals {
  Permutation seed;
  std::size_t size;
  std::vector<Rational> sums;
};

// Collapses per-orbit sums for one statistic into a verdict. The witnesses are
// orbit 0 and the first orbit disagreeing with it.
HomomesyVerdict verdict_from_totals(const std::vector<OrbitTotals>& totals, std::size_t column) {
  if (totals.empty()) throw std::logic_error("no orbits to judge");
  auto summary = [&](const OrbitTotals& t) {
    return OrbitSummary{t.seed, t.size, t.sums[column] / Rational(static_cast<long long>(t.size))};
  };
  OrbitSummary first = summary(totals.front());
  for (std::size_t k = 1; k < totals.size(); ++k) {
    OrbitSummary other = summary(totals[k]);
    if (other.average != first.average)
      return HomomesyVerdict{NotHomomesic{std::move(first), std::move(other)}, totals.size()};
  }
  return HomomesyVerdict{Homomesic{first.average}, totals.size()};
}

}  // namespace

Rational LinearCombination::evaluate(const Permutation& p) const {
  Rational value = offset;
  for (const auto& [id, weight] : terms) value += weight * Rational(permhom::evaluate(id, p));
  return value;
}

Rational orbit_average(const StatisticId& id, const Orbit& orbit) {
  const StatisticInfo& info = StatisticRegistry::builtin().at(id);
  Integer sum = 0;
  for (const Permutation& member : orbit.members()) sum += info.evaluate(member);
  return Rational(sum, Integer(orbit.size()));
}

std::vector<HomomesyVerdict> survey(int n, const OrbitGenerator& gen, std::span<const StatisticId> ids,
                                    const EngineOptions& options) {
  std::vector<Evaluator> evaluators;
  evaluators.reserve(ids.size());
  for (const auto& id : ids) evaluators.push_back(StatisticRegistry::builtin().at(id).evaluate);

  const auto totals = summarize_orbits(
      n, gen,
      [&](const Orbit& orbit) {
        std::vector<Integer> sums(evaluators.size(), 0);
        for (const Permutation& member : orbit.members())
          for (std::size_t s = 0; s < evaluators.size(); ++s) sums[s] += evaluators[s](member);
        OrbitTotals t{orbit.first(), orbit.size(), {}};
        t.sums.assign(sums.begin(), sums.end());
        return t;
      },
      options);

  std::vector<HomomesyVerdict> verdicts;
  verdicts.reserve(ids.size());
  for (std::size_t s = 0; s < ids.size(); ++s) verdicts.push_back(verdict_from_totals(totals, s));
  return verdicts;
}

HomomesyVerdict check_homomesy(int n, const OrbitGenerator& gen, const StatisticId& id,
                               const EngineOptions& options) {
  return survey(n, gen, std::span<const StatisticId>(&id, 1), options).front();
}

HomomesyVerdict check_linear_combination(const LinearCombination& combination, int n, const OrbitGenerator& gen,
                                         const EngineOptions& options) {
  for (const auto& term : combination.terms) StatisticRegistry::builtin().at(term.first);
  const auto totals = summarize_orbits(
      n, gen,
      [&](const Orbit& orbit) {
        Rational sum = 0;
        for (const Permutation& member : orbit.members()) sum += combination.evaluate(member);
        return OrbitTotals{orbit.first(), orbit.size(), {sum}};
      },
      options);
  return verdict_from_totals(totals, 0);
}

Rational global_average(int n, const StatisticId& id, int max_n) {
  const StatisticInfo& info = StatisticRegistry::builtin().at(id);
  Integer sum = 0;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        sum += info.evaluate(p);
        return true;
      },
      max_n);
  return Rational(sum, Integer(factorial(n)));
}

Integer reflection_trace_cycle_sum(const Permutation& p, const Permutation& cycle) {
  if (cycle.size() != p.size() || !is_n_cycle(cycle))
    throw std::invalid_argument("reflection trace sum needs an n-cycle of the same size");
  Integer sum = 0;
  Permutation shifted = p;
  for (int k = 1; k <= p.size(); ++k) {
    shifted = compose(shifted, cycle);
    sum += fixed_point_count(shifted) - 1;
  }
  return sum;
}

}  // namespace permhom
