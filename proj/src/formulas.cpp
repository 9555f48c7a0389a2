#include "permhom/formulas.hpp"

#include <stdexcept>

#include "permhom/orbit_engine.hpp"

namespace permhom {

namespace {

Rational q(long long num, long long den = 1) { return Rational(Integer(num), Integer(den)); }

// C(n+1, 3), the (n-1)-st tetrahedral number.
Rational tetrahedral(int n) { return q(static_cast<long long>(n + 1) * n * (n - 1), 6); }

// (1/n) * #{(i, j) in [n]x[n] : pred(i, j)}
template <typename Pred>
Rational pair_fraction(int n, Pred pred) {
  long long count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) count += pred(i, j) ? 1 : 0;
  return q(count, n);
}

Rational half_n_minus_1(int n) { return q(n - 1, 2); }
Rational half_n_plus_1(int n) { return q(n + 1, 2); }

std::vector<FormulaRow> builtin_rows() {
  using F = FormulaFamily;
  using P = ParityDomain;
  std::vector<FormulaRow> rows;
  auto add = [&](F family, StatisticId id, P parity, int n_min, std::string expression, Rational (*value)(int)) {
    rows.push_back(FormulaRow{family, std::move(id), parity, n_min, std::move(expression), value});
  };
  const F rot = F::RotationAndCoxeter;

  // i-th entry
  for (int id : {54, 740, 1806, 1807}) add(rot, id, P::Any, 1, "(n+1)/2", half_n_plus_1);

  // k-excedances, cyclical and complementary variants
  add(rot, 22, P::Any, 1, "1", +[](int) { return q(1); });
  add(rot, 237, P::Any, 1, "(n-1)/n", +[](int n) { return q(n - 1, n); });
  add(rot, 648, P::Any, 2, "(n-2)/n", +[](int n) { return q(n - 2, n); });
  add(rot, 649, P::Any, 3, "(n-3)/n", +[](int n) { return q(n - 3, n); });
  add(rot, 241, P::Any, 1, "1", +[](int) { return q(1); });
  add(rot, 236, P::Any, 2, "2", +[](int) { return q(2); });
  add(rot, 239, P::Any, 1, "1+(n-1)/n", +[](int n) { return q(1) + q(n - 1, n); });
  add(rot, 235, P::Any, 1, "n-1", +[](int n) { return q(n - 1); });
  add(rot, 238, P::Any, 1, "(n-1)^2/n", +[](int n) { return q(static_cast<long long>(n - 1) * (n - 1), n); });
  add(rot, 240, P::Any, 1, "n-(n-1)/n", +[](int n) { return q(n) - q(n - 1, n); });
  add(rot, 242, P::Any, 2, "n-2", +[](int n) { return q(n - 2); });
  add(rot, 673, P::Any, 1, "n-1", +[](int n) { return q(n - 1); });

  // excedances and deficiencies
  add(rot, 155, P::Any, 1, "(n-1)/2", half_n_minus_1);
  add(rot, 703, P::Any, 1, "(n-1)/2", half_n_minus_1);
  add(rot, 213, P::Any, 1, "(n+1)/2", half_n_plus_1);
  add(rot, 702, P::Any, 1, "(n+1)/2", half_n_plus_1);
  add(rot, 710, P::Any, 1, "(n-1)(n-2)/(2n)", +[](int n) { return q(static_cast<long long>(n - 1) * (n - 2), 2 * n); });
  add(rot, 711, P::Any, 1, "(n-1)(n-2)/(2n)", +[](int n) { return q(static_cast<long long>(n - 1) * (n - 2), 2 * n); });
  add(rot, 1439, P::Any, 1, "floor((n+2)/2)", +[](int n) { return q((n + 2) / 2); });

  // displacement and inversion sums
  add(rot, 29, P::Any, 1, "C(n+1,3)/n", +[](int n) { return tetrahedral(n) / q(n); });
  add(rot, 830, P::Any, 1, "2*C(n+1,3)/n", +[](int n) { return q(2) * tetrahedral(n) / q(n); });
  add(rot, 55, P::Any, 1, "C(n+1,3)/2", +[](int n) { return tetrahedral(n) / q(2); });
  add(rot, 341, P::Any, 1, "C(n+1,3)/2", +[](int n) { return tetrahedral(n) / q(2); });
  add(rot, 828, P::Any, 1, "C(n+1,3)", tetrahedral);

  // miscellaneous
  add(rot, 342, P::Any, 1, "n(n+1)^2/4", +[](int n) { return q(static_cast<long long>(n) * (n + 1) * (n + 1), 4); });
  add(rot, 1285, P::Any, 1, "(1/n) sum_{p prime <= 2n} min(p-1, 2n-p+1)", +[](int n) {
    long long total = 0;
    for (int p = 2; p <= 2 * n; ++p)
      if (is_prime(p)) total += pair_sum_multiplicity(n, p);
    return q(total, n);
  });
  add(rot, 1287, P::Any, 1, "(1/n) #{(i,j) in [n]^2 : ij-1 prime}", +[](int n) {
    return pair_fraction(n, [](int i, int j) { return is_prime(static_cast<std::int64_t>(i) * j - 1); });
  });
  add(rot, 1288, P::Any, 1, "(1/n) #{(i,j) in [n]^2 : ij+1 prime}", +[](int n) {
    return pair_fraction(n, [](int i, int j) { return is_prime(static_cast<std::int64_t>(i) * j + 1); });
  });
  add(rot, 1293, P::Any, 1, "(l/n)((2n+1)H_2n - (2n+2)H_n), l = lcm{1..2n}", +[](int n) {
    const Rational bracket = q(2 * n + 1) * harmonic(2 * n) - q(2 * n + 2) * harmonic(n);
    return Rational(lcm_upto(2 * n)) / q(n) * bracket;
  });
  add(rot, 1801, P::Any, 1, "floor(n/2)ceil(n/2)/n", +[](int n) {
    return q(static_cast<long long>(n / 2) * ((n + 1) / 2), n);
  });

  // pair swapping
  for (StatisticId id : {StatisticId(1114), StatisticId("odd_ascents")})
    add(F::PairSwap, id, P::Any, 1, "floor(n/2)/2", +[](int n) { return q(n / 2, 2); });

  // parity rotation
  add(F::ParityRotation, 236, P::Even, 2, "2", +[](int) { return q(2); });
  add(F::ParityRotation, 242, P::Even, 2, "n-2", +[](int n) { return q(n - 2); });
  add(F::ParityRotation, 21, P::Odd, 1, "(n-1)/2", half_n_minus_1);
  add(F::ParityRotation, 245, P::Odd, 1, "(n-1)/2", half_n_minus_1);
  add(F::ParityRotation, 470, P::Odd, 1, "(n+1)/2", half_n_plus_1);
  add(F::ParityRotation, 325, P::Odd, 1, "(n+1)/2", half_n_plus_1);
  add(F::ParityRotation, 1520, P::Odd, 3, "(n-3)/2", +[](int n) { return q(n - 3, 2); });

  // valley hopping
  add(F::ValleyHopping, 21, P::Any, 1, "(n-1)/2", half_n_minus_1);
  add(F::ValleyHopping, 245, P::Any, 1, "(n-1)/2", half_n_minus_1);
  add(F::ValleyHopping, 325, P::Any, 1, "(n+1)/2", half_n_plus_1);
  add(F::ValleyHopping, 470, P::Any, 1, "(n+1)/2", half_n_plus_1);
  return rows;
}

}  // namespace

FormulaFamily formula_family(MapFamily family) {
  switch (family) {
    case MapFamily::Rotation:
    case MapFamily::RightMultiplyCycle: return FormulaFamily::RotationAndCoxeter;
    case MapFamily::PairSwap: return FormulaFamily::PairSwap;
    case MapFamily::ParityRotation: return FormulaFamily::ParityRotation;
    case MapFamily::ValleyHopping: return FormulaFamily::ValleyHopping;
  }
  throw std::logic_error("unknown map family");
}

std::string to_string(FormulaFamily family) {
  switch (family) {
    case FormulaFamily::RotationAndCoxeter: return "rotation";
    case FormulaFamily::PairSwap: return "pair-swap";
    case FormulaFamily::ParityRotation: return "parity-rotation";
    case FormulaFamily::ValleyHopping: return "valley-hopping";
  }
  return "?";
}

FormulaFamily parse_formula_family(std::string_view text) {
  if (text == "rotation" || text == "rot" || text == "coxeter" || text == "coxeter-all" ||
      text.starts_with("coxeter:"))
    return FormulaFamily::RotationAndCoxeter;
  if (text == "pair-swap" || text == "ps") return FormulaFamily::PairSwap;
  if (text == "parity-rotation" || text == "parrot") return FormulaFamily::ParityRotation;
  if (text == "valley-hopping" || text == "vh") return FormulaFamily::ValleyHopping;
  throw std::invalid_argument("unknown map family '" + std::string(text) + "'");
}

bool FormulaRow::applies_to(int n) const {
  if (n < n_min) return false;
  switch (parity) {
    case ParityDomain::Any: return true;
    case ParityDomain::Even: return n % 2 == 0;
    case ParityDomain::Odd: return n % 2 == 1;
  }
  return false;
}

const FormulaTable& FormulaTable::builtin() {
  static const FormulaTable table(builtin_rows());
  return table;
}

const FormulaRow* FormulaTable::find(FormulaFamily family, const StatisticId& id) const {
  for (const auto& row : rows_)
    if (row.family == family && row.id == id) return &row;
  return nullptr;
}

std::vector<const FormulaRow*> FormulaTable::rows_for(FormulaFamily family, int n) const {
  std::vector<const FormulaRow*> out;
  for (const auto& row : rows_)
    if (row.family == family && row.applies_to(n)) out.push_back(&row);
  return out;
}

Rational expected_average(FormulaFamily family, const StatisticId& id, int n) {
  const FormulaRow* row = FormulaTable::builtin().find(family, id);
  if (row == nullptr)
    throw std::out_of_range("no proven average for statistic " + id.str() + " under " + to_string(family));
  if (!row->applies_to(n)) {
    std::string domain = row->parity == ParityDomain::Even  ? "even n >= "
                         : row->parity == ParityDomain::Odd ? "odd n >= "
                                                            : "n >= ";
    throw FormulaDomainError("statistic " + id.str() + " under " + to_string(family) + " is only proven for " +
                             domain + std::to_string(row->n_min) + ", got n = " + std::to_string(n));
  }
  return row->value(n);
}

}  // namespace permhom
