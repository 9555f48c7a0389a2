#include <gtest/gtest.h>

#include "permhom/arithmetic.hpp"
#include "permhom/formulas.hpp"
#include "permhom/homomesy.hpp"
#include "support.hpp"

using namespace permhom;
using testing_support::Q;

namespace {

Rational binom(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return Rational(r);
}

}  // namespace

TEST(Arithmetic, Harmonic) {
  EXPECT_EQ(harmonic(0), 0);
  EXPECT_EQ(harmonic(1), 1);
  EXPECT_EQ(harmonic(3), Q("11/6"));
  EXPECT_EQ(harmonic(6), Q("49/20"));
}

TEST(Arithmetic, Lcm) {
  EXPECT_EQ(lcm_upto(1), 1);
  EXPECT_EQ(lcm_upto(6), 60);
  EXPECT_EQ(lcm_upto(16), 720720);
  EXPECT_EQ(lcm_upto(60), Integer("9690712164777231700912800"));
}

TEST(Arithmetic, Primes) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(49));
  EXPECT_TRUE(is_prime(97));
  int count = 0;
  for (int v = 0; v < 1000; ++v) count += is_prime(v);
  EXPECT_EQ(count, 168);
}

TEST(Rationals, TextForm) {
  EXPECT_EQ(to_string(Q("4/2")), "2");
  EXPECT_EQ(to_string(Q("-6/4")), "-3/2");
  EXPECT_EQ(to_string(make_rational(149, 3)), "149/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(ExpectedAverage, Examples) {
  const auto rot = FormulaFamily::RotationAndCoxeter;
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(expected_average(rot, 22, n), 1);
  EXPECT_EQ(expected_average(rot, 1293, 3), Q("149/3"));
  EXPECT_EQ(expected_average(rot, 29, 3), Q("4/3"));
  EXPECT_EQ(expected_average(rot, 29, 3), binom(4, 3) / 3);
  EXPECT_EQ(expected_average(rot, 342, 5), Q("45"));
  EXPECT_EQ(expected_average(FormulaFamily::PairSwap, 1114, 7), Q("3/2"));
}

TEST(ExpectedAverage, Errors) {
  EXPECT_THROW(expected_average(FormulaFamily::ParityRotation, 21, 4), FormulaDomainError);
  EXPECT_THROW(expected_average(FormulaFamily::ParityRotation, 236, 5), FormulaDomainError);
  EXPECT_THROW(expected_average(FormulaFamily::RotationAndCoxeter, "inversion_number", 3), std::out_of_range);
  EXPECT_THROW(expected_average(FormulaFamily::ValleyHopping, 22, 3), std::out_of_range);
}

TEST(FormulaTableTest, Shape) {
  const auto& table = FormulaTable::builtin();
  EXPECT_EQ(table.rows_for(FormulaFamily::RotationAndCoxeter, 7).size(), 34u);
  EXPECT_EQ(table.rows_for(FormulaFamily::PairSwap, 4).size(), 2u);
  EXPECT_EQ(table.rows_for(FormulaFamily::ParityRotation, 4).size(), 2u);
  EXPECT_EQ(table.rows_for(FormulaFamily::ParityRotation, 5).size(), 5u);
  EXPECT_EQ(table.rows_for(FormulaFamily::ValleyHopping, 5).size(), 4u);
  for (const auto& row : table.rows()) EXPECT_TRUE(StatisticRegistry::builtin().contains(row.id)) << row.id.str();
}

TEST(FormulaTableTest, FamilyParsing) {
  EXPECT_EQ(parse_formula_family("rot"), FormulaFamily::RotationAndCoxeter);
  EXPECT_EQ(parse_formula_family("coxeter:231"), FormulaFamily::RotationAndCoxeter);
  EXPECT_EQ(parse_formula_family("coxeter-all"), FormulaFamily::RotationAndCoxeter);
  EXPECT_EQ(parse_formula_family("ps"), FormulaFamily::PairSwap);
  EXPECT_EQ(parse_formula_family("parrot"), FormulaFamily::ParityRotation);
  EXPECT_EQ(parse_formula_family("vh"), FormulaFamily::ValleyHopping);
  EXPECT_THROW(parse_formula_family("spin"), std::invalid_argument);
  EXPECT_EQ(formula_family(MapFamily::RightMultiplyCycle), FormulaFamily::RotationAndCoxeter);
}

TEST(FormulaAlgebra, HarmonicSplit) {
  for (int n = 1; n <= 12; ++n) {
    Rational direct = 0;
    for (int k = 2; k <= 2 * n; ++k) direct += Rational(pair_sum_multiplicity(n, k)) / k;
    direct /= n;
    const Rational closed = (Rational(2 * n + 1) * harmonic(2 * n) - Rational(2 * n + 2) * harmonic(n)) / n;
    ASSERT_EQ(direct, closed) << n;
    ASSERT_EQ(expected_average(FormulaFamily::RotationAndCoxeter, 1293, n), closed * Rational(lcm_upto(2 * n)));
  }
}

TEST(FormulaAlgebra, PrimeSumAgainstPairCount) {
  for (int n = 1; n <= 12; ++n) {
    int count = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) count += is_prime(i + j);
    ASSERT_EQ(expected_average(FormulaFamily::RotationAndCoxeter, 1285, n), make_rational(count, n)) << n;
  }
}

// The engine agrees with every applicable row, n = 3..7 for single maps and
// 3..6 for all n-cycles.
TEST(FormulaAgreement, SingleMaps) {
  for (const char* spec : {"rot", "ps", "parrot", "vh"}) {
    const auto gen = OrbitGenerator::parse(spec);
    for (int n = 3; n <= 7; ++n)
      for (const FormulaRow* row : FormulaTable::builtin().rows_for(formula_family(gen.family()), n)) {
        const auto v = check_homomesy(n, gen, row->id);
        ASSERT_TRUE(v.is_homomesic()) << spec << " n=" << n << " " << row->id.str();
        ASSERT_EQ(v.constant(), row->value(n)) << spec << " n=" << n << " " << row->id.str();
      }
  }
}

TEST(FormulaAgreement, AllCycles) {
  for (int n = 3; n <= 6; ++n) {
    std::vector<StatisticId> ids;
    for (const FormulaRow* row : FormulaTable::builtin().rows_for(FormulaFamily::RotationAndCoxeter, n))
      ids.push_back(row->id);
    for (const auto& c : n_cycles(n)) {
      const auto verdicts = survey(n, OrbitGenerator::right_multiply(c), ids);
      for (std::size_t s = 0; s < ids.size(); ++s) {
        ASSERT_TRUE(verdicts[s].is_homomesic()) << to_string(c) << " " << ids[s].str();
        ASSERT_EQ(verdicts[s].constant(), expected_average(FormulaFamily::RotationAndCoxeter, ids[s], n));
      }
    }
  }
}

TEST(FormulaAgreement, FrozenOracle) {
  const auto& oracle = testing_support::oracle();
  for (const auto& [n, stats] : oracle.at("rotation").items())
    for (const auto& [id, value] : stats.items())
      ASSERT_EQ(expected_average(FormulaFamily::RotationAndCoxeter, StatisticId::parse(id), std::stoi(n)),
                Q(value.get<std::string>()))
          << n << " " << id;
}
