#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permhom/arithmetic.hpp"
#include "permhom/maps.hpp"
#include "permhom/rational.hpp"
#include "permhom/statistics.hpp"

namespace permhom {

/// Map families that share a table of proven orbit averages. Rotation and
/// right multiplication by any n-cycle share one family.
enum class FormulaFamily { RotationAndCoxeter, PairSwap, ParityRotation, ValleyHopping };

FormulaFamily formula_family(MapFamily family);

/// "rotation", "pair-swap", "parity-rotation", "valley-hopping".
std::string to_string(FormulaFamily family);

/// Accepts the family names above and the generator names rot, coxeter,
/// coxeter-all, ps, parrot, vh.
FormulaFamily parse_formula_family(std::string_view text);

enum class ParityDomain { Any, Even, Odd };

/// Thrown when a row is queried outside the sizes it is proven for.
class FormulaDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct FormulaRow {
  FormulaFamily family;
  StatisticId id;
  ParityDomain parity = ParityDomain::Any;
  int n_min = 1;
  std::string expression;  // human-readable closed form in n
  Rational (*value)(int n) = nullptr;

  bool applies_to(int n) const;
};

class FormulaTable {
public:
  static const FormulaTable& builtin();

  explicit FormulaTable(std::vector<FormulaRow> rows) : rows_(std::move(rows)) {}

  const std::vector<FormulaRow>& rows() const noexcept { return rows_; }

  /// nullptr when the pair has no row.
  const FormulaRow* find(FormulaFamily family, const StatisticId& id) const;

  /// Rows of a family that apply at size n, in table order.
  std::vector<const FormulaRow*> rows_for(FormulaFamily family, int n) const;

private:
  std::vector<FormulaRow> rows_;
};

/// The proven orbit average of `id` under `family` at size n.
/// Throws std::out_of_range for an unknown pair and FormulaDomainError when n
/// has the wrong parity or is below the row's minimum size.
Rational expected_average(FormulaFamily family, const StatisticId& id, int n);

}  // namespace permhom
