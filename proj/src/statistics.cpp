#include "permhom/statistics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "permhom/arithmetic.hpp"

namespace permhom {

StatisticId StatisticId::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty statistic id");
  int number = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), number);
  if (ec == std::errc{} && ptr == text.data() + text.size() && number >= 0) return StatisticId(number);
  return StatisticId(std::string(text));
}

std::optional<int> StatisticId::findstat_number() const {
  if (const int* number = std::get_if<int>(&key_)) return *number;
  return std::nullopt;
}

std::string StatisticId::str() const {
  if (const int* number = std::get_if<int>(&key_)) return std::to_string(*number);
  return std::get<std::string>(key_);
}

namespace {

// Counts 1-indexed positions i with pred(i, p(i)).
template <typename Pred>
std::int64_t count_positions(const Permutation& p, Pred pred) {
  std::int64_t count = 0;
  for (int i = 1; i <= p.size(); ++i) count += pred(i, p(i)) ? 1 : 0;
  return count;
}

// Value i+k read cyclically into [n].
int cyclic_target(int i, int k, int n) { return (i - 1 + k) % n + 1; }

std::int64_t fixed_points(const Permutation& p) {
  return count_positions(p, [](int i, int v) { return v == i; });
}
std::int64_t k_excedances(const Permutation& p, int k) {
  return count_positions(p, [k](int i, int v) { return v == i + k; });
}
std::int64_t cyclical_small_excedances(const Permutation& p) {
  const int n = p.size();
  return count_positions(p, [n](int i, int v) { return v == cyclic_target(i, 1, n); });
}
std::int64_t cyclical_small_weak_excedances(const Permutation& p) {
  const int n = p.size();
  return count_positions(p, [n](int i, int v) { return v == i || v == cyclic_target(i, 1, n); });
}
std::int64_t small_weak_excedances(const Permutation& p) {
  return count_positions(p, [](int i, int v) { return v == i || v == i + 1; });
}
std::int64_t excedances(const Permutation& p) {
  return count_positions(p, [](int i, int v) { return v > i; });
}
std::int64_t deficiencies(const Permutation& p) {
  return count_positions(p, [](int i, int v) { return v < i; });
}

// Descents and ascents live at positions 1..n-1 only.
std::int64_t descents_where(const Permutation& p, bool odd_only) {
  std::int64_t count = 0;
  for (int i = 1; i < p.size(); i += odd_only ? 2 : 1) count += p(i) > p(i + 1);
  return count;
}
std::int64_t ascents_where(const Permutation& p, bool odd_only) {
  std::int64_t count = 0;
  for (int i = 1; i < p.size(); i += odd_only ? 2 : 1) count += p(i) < p(i + 1);
  return count;
}

// Sum of (j - i) over pairs i < j with p(i) > p(j) (inversions) or p(i) < p(j).
std::int64_t pair_gap_sum(const Permutation& p, bool inversions) {
  std::int64_t sum = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if ((p(i) > p(j)) == inversions) sum += j - i;
  return sum;
}

std::int64_t inversion_count(const Permutation& p) {
  std::int64_t count = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j) count += p(i) > p(j);
  return count;
}

const Integer& lcm_of_column_sums(int n) {
  // lcm{1..2n}; cached because the sweeps ask for the same n repeatedly.
  constexpr int kCached = 64;
  static const std::array<Integer, kCached + 1> cache = [] {
    std::array<Integer, kCached + 1> table;
    table[0] = 1;
    for (int m = 1; m <= kCached; ++m) table[static_cast<std::size_t>(m)] = lcm_upto(2 * m);
    return table;
  }();
  if (n <= kCached) return cache[static_cast<std::size_t>(n)];
  thread_local Integer scratch;
  scratch = lcm_upto(2 * n);
  return scratch;
}

Integer lcm_reciprocal_column_sums(const Permutation& p) {
  const Integer& l = lcm_of_column_sums(p.size());
  Integer total = 0;
  for (int i = 1; i <= p.size(); ++i) total += l / (i + p(i));
  return total;
}

template <std::int64_t (*F)(const Permutation&)>
Integer wrap(const Permutation& p) {
  return Integer(F(p));
}

#define PERMHOM_STAT(body) +[](const Permutation& p) -> Integer { return Integer(body); }

constexpr const char* kDescentConvention = "descents and ascents only at positions 1..n-1";
constexpr const char* kCyclicConvention = "cyclical: p(i) = i+1 read mod n into [n]";

std::vector<StatisticInfo> builtin_entries() {
  std::vector<StatisticInfo> e;
  auto add = [&](StatisticId id, std::string name, std::string description, std::string conventions,
                 Evaluator f) {
    e.push_back(StatisticInfo{std::move(id), std::move(name), std::move(description), std::move(conventions), f});
  };

  // i-th entry statistics
  add(54, "first_entry", "The first entry of the permutation.", "", PERMHOM_STAT(p(1)));
  add(740, "last_entry", "The last entry of the permutation.", "", PERMHOM_STAT(p(p.size())));
  add(1806, "upper_middle_entry", "The upper middle entry of the permutation.", "p(ceil((n+1)/2))",
      PERMHOM_STAT(p((p.size() + 2) / 2)));
  add(1807, "lower_middle_entry", "The lower middle entry of the permutation.", "p(floor((n+1)/2))",
      PERMHOM_STAT(p((p.size() + 1) / 2)));

  // excedance family
  add(22, "fixed_points", "The number of fixed points of the permutation.", "", wrap<fixed_points>);
  add(237, "small_excedances", "The number of small excedances.", "p(i) = i+1", PERMHOM_STAT(k_excedances(p, 1)));
  add(241, "cyclical_small_excedances", "The number of cyclical small excedances.", kCyclicConvention,
      wrap<cyclical_small_excedances>);
  add(236, "cyclical_small_weak_excedances", "The number of cyclical small weak excedances.",
      "p(i) = i or p(i) = i+1 mod n", wrap<cyclical_small_weak_excedances>);
  add(239, "small_weak_excedances", "The number of small weak excedances.", "p(i) in {i, i+1}",
      wrap<small_weak_excedances>);
  add(235, "non_cyclical_small_excedances", "The number of indices that are not cyclical small excedances.",
      kCyclicConvention, PERMHOM_STAT(p.size() - cyclical_small_excedances(p)));
  add(238, "non_small_weak_excedances", "The number of indices that are not small weak excedances.", "",
      PERMHOM_STAT(p.size() - small_weak_excedances(p)));
  add(240, "non_small_excedances", "The number of indices that are not small excedances.", "",
      PERMHOM_STAT(p.size() - k_excedances(p, 1)));
  add(242, "non_cyclical_small_weak_excedances",
      "The number of indices that are not cyclical small weak excedances.", "",
      PERMHOM_STAT(p.size() - cyclical_small_weak_excedances(p)));
  add(648, "two_excedances", "The number of 2-excedances of the permutation.", "p(i) = i+2",
      PERMHOM_STAT(k_excedances(p, 2)));
  add(649, "three_excedances", "The number of 3-excedances of the permutation.", "p(i) = i+3",
      PERMHOM_STAT(k_excedances(p, 3)));
  add(673, "support_size", "The size of the support of the permutation (number of non-fixed points).", "",
      PERMHOM_STAT(p.size() - fixed_points(p)));
  add(155, "excedances", "The number of excedances of the permutation.", "p(i) > i", wrap<excedances>);
  add(703, "deficiencies", "The number of deficiencies of the permutation.", "p(i) < i", wrap<deficiencies>);
  add(213, "weak_excedances", "The number of weak excedances of the permutation.", "p(i) >= i",
      PERMHOM_STAT(excedances(p) + fixed_points(p)));
  add(702, "weak_deficiencies", "The number of weak deficiencies of the permutation.", "p(i) <= i",
      PERMHOM_STAT(deficiencies(p) + fixed_points(p)));
  add(711, "big_excedances", "The number of big excedances of the permutation.", "p(i) > i+1",
      PERMHOM_STAT(count_positions(p, [](int i, int v) { return v > i + 1; })));
  add(710, "big_deficiencies", "The number of big deficiencies of the permutation.", "p(i) < i-1",
      PERMHOM_STAT(count_positions(p, [](int i, int v) { return v < i - 1; })));
  add(1439, "even_weak_deficiencies_odd_weak_excedances",
      "The number of even weak deficiencies and odd weak excedances.",
      "#{i even: p(i) <= i} + #{i odd: p(i) >= i}",
      PERMHOM_STAT(count_positions(p, [](int i, int v) { return i % 2 == 0 ? v <= i : v >= i; })));

  // inversion family
  add(29, "depth", "The depth of the permutation.", "sum of p(i) - i over excedances", PERMHOM_STAT([&] {
        std::int64_t s = 0;
        for (int i = 1; i <= p.size(); ++i) s += std::max(p(i) - i, 0);
        return s;
      }()));
  add(830, "total_displacement", "The total displacement of the permutation.", "sum |p(i) - i|",
      PERMHOM_STAT([&] {
        std::int64_t s = 0;
        for (int i = 1; i <= p.size(); ++i) s += std::abs(p(i) - i);
        return s;
      }()));
  add(55, "inversion_sum", "The inversion sum of the permutation.", "sum of j - i over inversions i < j",
      PERMHOM_STAT(pair_gap_sum(p, true)));
  add(341, "non_inversion_sum", "The non-inversion sum of the permutation.",
      "sum of j - i over non-inversions i < j", PERMHOM_STAT(pair_gap_sum(p, false)));
  add(828, "spearmans_rho", "The Spearman's rho of the permutation and the identity permutation.",
      "sum (p(i) - i)^2", PERMHOM_STAT([&] {
        std::int64_t s = 0;
        for (int i = 1; i <= p.size(); ++i) s += std::int64_t{p(i) - i} * (p(i) - i);
        return s;
      }()));

  // miscellaneous
  add(342, "cosine", "The cosine of the permutation.", "sum i*p(i)", PERMHOM_STAT([&] {
        std::int64_t s = 0;
        for (int i = 1; i <= p.size(); ++i) s += std::int64_t{i} * p(i);
        return s;
      }()));
  add(1285, "prime_column_sums", "The number of primes in the column sums of the two line notation.",
      "#{i: i + p(i) prime}", PERMHOM_STAT(count_positions(p, [](int i, int v) { return is_prime(i + v); })));
  add(1287, "prime_products_minus_one",
      "The number of primes obtained by multiplying preimage and image and subtracting one.",
      "#{i: i*p(i) - 1 prime}",
      PERMHOM_STAT(count_positions(p, [](int i, int v) { return is_prime(std::int64_t{i} * v - 1); })));
  add(1288, "prime_products_plus_one",
      "The number of primes obtained by multiplying preimage and image and adding one.",
      "#{i: i*p(i) + 1 prime}",
      PERMHOM_STAT(count_positions(p, [](int i, int v) { return is_prime(std::int64_t{i} * v + 1); })));
  add(1293, "lcm_reciprocal_column_sums",
      "The sum of all 1/(i+p(i)) times the lcm of all possible values of i+p(i).", "lcm{1..2n} * sum 1/(i+p(i))",
      lcm_reciprocal_column_sums);
  add(1801, "half_parity_mismatches", "Half the number of preimage-image pairs of different parity.",
      "#{i: i + p(i) odd} / 2",
      PERMHOM_STAT(count_positions(p, [](int i, int v) { return (i + v) % 2 == 1; }) / 2));

  // descent family
  add(21, "descents", "The number of descents of the permutation.", kDescentConvention,
      PERMHOM_STAT(descents_where(p, false)));
  add(245, "ascents", "The number of ascents of the permutation.", kDescentConvention,
      PERMHOM_STAT(ascents_where(p, false)));
  add(470, "runs", "The number of runs in the permutation.", "descents + 1",
      PERMHOM_STAT(descents_where(p, false) + 1));
  add(325, "tree_width", "The width of the tree associated to the permutation.", "computed as descents + 1",
      PERMHOM_STAT(descents_where(p, false) + 1));
  add(1520, "strict_three_descents", "The number of strict 3-descents.", "#{i <= n-3: p(i) > p(i+3)}",
      PERMHOM_STAT([&] {
        std::int64_t s = 0;
        for (int i = 1; i + 3 <= p.size(); ++i) s += p(i) > p(i + 3);
        return s;
      }()));
  add(1114, "odd_descents", "The number of odd descents of the permutation.",
      "descents at odd positions i < n", PERMHOM_STAT(descents_where(p, true)));
  add("odd_ascents", "odd_ascents", "The number of ascents at odd positions.", "ascents at odd positions i < n",
      PERMHOM_STAT(ascents_where(p, true)));

  // controls
  add("inversion_number", "inversion_number", "The number of inversions of the permutation.", "",
      PERMHOM_STAT(inversion_count(p)));
  add("reflection_trace", "reflection_trace",
      "Trace of the permutation in the reflection representation of S_n.", "fixed points - 1",
      PERMHOM_STAT(fixed_points(p) - 1));
  return e;
}

#undef PERMHOM_STAT

}  // namespace

StatisticRegistry::StatisticRegistry(std::vector<StatisticInfo> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const StatisticInfo& a, const StatisticInfo& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].id == entries_[i].id)
      throw std::invalid_argument("duplicate statistic id " + entries_[i].id.str());
}

const StatisticRegistry& StatisticRegistry::builtin() {
  static const StatisticRegistry registry(builtin_entries());
  return registry;
}

bool StatisticRegistry::contains(const StatisticId& id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const StatisticInfo& e, const StatisticId& key) { return e.id < key; });
  return it != entries_.end() && it->id == id;
}

const StatisticInfo& StatisticRegistry::at(const StatisticId& id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const StatisticInfo& e, const StatisticId& key) { return e.id < key; });
  if (it != entries_.end() && it->id == id) return *it;
  std::string known;
  for (const auto& entry : entries_) known += (known.empty() ? "" : ", ") + entry.id.str();
  throw std::out_of_range("unknown statistic '" + id.str() + "'; known ids: " + known);
}

std::vector<StatisticId> StatisticRegistry::ids() const {
  std::vector<StatisticId> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.id);
  return out;
}

Integer evaluate(const StatisticId& id, const Permutation& p) { return StatisticRegistry::builtin().evaluate(id, p); }

std::vector<std::pair<StatisticId, std::string>> list_statistics() {
  std::vector<std::pair<StatisticId, std::string>> out;
  for (const auto& entry : StatisticRegistry::builtin().entries()) out.emplace_back(entry.id, entry.description);
  return out;
}

}  // namespace permhom
