#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permhom/permutation.hpp"
#include "permhom/rational.hpp"

namespace permhom {

/// Key of a permutation statistic: a FindStat number, or a symbolic name for
/// the few statistics without one (odd_ascents, inversion_number,
/// reflection_trace).
///
/// Ordering puts numbered ids first, ascending, then names alphabetically.
class StatisticId {
public:
  StatisticId(int findstat_number) : key_(findstat_number) {}  // NOLINT(google-explicit-constructor)
  StatisticId(std::string name) : key_(std::move(name)) {}      // NOLINT(google-explicit-constructor)
  StatisticId(const char* name) : key_(std::string(name)) {}    // NOLINT(google-explicit-constructor)

  /// All-digit text becomes a FindStat number, anything else a name.
  static StatisticId parse(std::string_view text);

  std::optional<int> findstat_number() const;
  std::string str() const;

  friend bool operator==(const StatisticId&, const StatisticId&) = default;
  friend bool operator<(const StatisticId& a, const StatisticId& b) { return a.key_ < b.key_; }

private:
  std::variant<int, std::string> key_;
};

using Evaluator = Integer (*)(const Permutation&);

struct StatisticInfo {
  StatisticId id;
  std::string name;         // snake_case handle
  std::string description;  // one line, FindStat wording where one exists
  std::string conventions;  // boundary and comparison conventions, empty if none
  Evaluator evaluate;
};

/// Catalog of integer-valued permutation statistics.
class StatisticRegistry {
public:
  /// The built-in catalog. Immutable and safe to share across threads.
  static const StatisticRegistry& builtin();

  explicit StatisticRegistry(std::vector<StatisticInfo> entries);

  bool contains(const StatisticId& id) const;

  /// Throws std::out_of_range naming the known ids when `id` is missing.
  const StatisticInfo& at(const StatisticId& id) const;

  /// Entries sorted by id.
  const std::vector<StatisticInfo>& entries() const noexcept { return entries_; }

  std::vector<StatisticId> ids() const;

  Integer evaluate(const StatisticId& id, const Permutation& p) const { return at(id).evaluate(p); }

private:
  std::vector<StatisticInfo> entries_;
};

/// Evaluates a built-in statistic.
Integer evaluate(const StatisticId& id, const Permutation& p);

/// (id, description) for every built-in statistic, sorted by id.
std::vector<std::pair<StatisticId, std::string>> list_statistics();

}  // namespace permhom
