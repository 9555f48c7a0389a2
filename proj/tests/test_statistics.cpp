#include <gtest/gtest.h>

#include <set>

#include "permhom/statistics.hpp"
#include "support.hpp"

using namespace permhom;
using testing_support::P;

namespace {

int ev(const StatisticId& id, const Permutation& p) { return static_cast<int>(evaluate(id, p)); }

}  // namespace

TEST(Statistics, Examples) {
  EXPECT_EQ(ev(22, P("123")), 3);
  EXPECT_EQ(ev(22, P("231")), 0);
  EXPECT_EQ(ev(22, P("321")), 1);
  EXPECT_EQ(ev(155, P("74135862")), 3);
  EXPECT_EQ(ev(703, P("74135862")), 4);
  EXPECT_EQ(ev(22, P("74135862")), 1);
  EXPECT_EQ(evaluate(1293, P("123")), 55);
  EXPECT_EQ(evaluate(1293, P("231")), 47);
  EXPECT_EQ(evaluate(1293, P("312")), 47);
}

TEST(Statistics, HandEvaluated) {
  const auto p = P("3176524");
  EXPECT_EQ(ev(54, p), 3);
  EXPECT_EQ(ev(740, p), 4);
  EXPECT_EQ(ev(1806, p), 6);
  EXPECT_EQ(ev(1807, p), 6);
  EXPECT_EQ(ev(1806, P("2413")), 1);
  EXPECT_EQ(ev(1807, P("2413")), 4);
  EXPECT_EQ(ev(21, p), 4);
  EXPECT_EQ(ev(245, p), 2);
  EXPECT_EQ(ev(1114, p), 3);
  EXPECT_EQ(ev("odd_ascents", p), 0);
  EXPECT_EQ(ev(1520, p), 2);
  EXPECT_EQ(ev("inversion_number", p), 11);
  EXPECT_EQ(ev(241, P("2341")), 4);
  EXPECT_EQ(ev(237, P("2341")), 3);
  EXPECT_EQ(ev(342, P("123")), 14);
  EXPECT_EQ(ev("reflection_trace", P("231")), -1);
}

TEST(Statistics, DescentsNeverAtLastPosition) {
  EXPECT_EQ(ev(21, P("1")), 0);
  EXPECT_EQ(ev(245, P("1")), 0);
  EXPECT_EQ(ev(1114, P("21")), 1);
  EXPECT_EQ(ev(1114, P("132")), 0);
}

TEST(Statistics, Complementarity) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_symmetric_group(n)) {
      ASSERT_EQ(ev(155, p) + ev(703, p) + ev(22, p), n);
      ASSERT_EQ(ev(21, p) + ev(245, p), n - 1);
      ASSERT_EQ(ev(235, p), n - ev(241, p));
      ASSERT_EQ(ev(238, p), n - ev(239, p));
      ASSERT_EQ(ev(240, p), n - ev(237, p));
      ASSERT_EQ(ev(242, p), n - ev(236, p));
      ASSERT_EQ(ev(673, p), n - ev(22, p));
      ASSERT_EQ(ev(213, p), ev(155, p) + ev(22, p));
      ASSERT_EQ(ev(702, p), ev(703, p) + ev(22, p));
    }
}

TEST(Statistics, Identities) {
  for (const auto& p : enumerate_symmetric_group(5)) {
    ASSERT_EQ(2 * ev(29, p), ev(830, p));
    ASSERT_EQ(ev(828, p), 2 * ev(55, p));
    ASSERT_EQ(ev(341, p), ev(55, reverse(p)));
    ASSERT_EQ(ev(470, p), ev(21, p) + 1);
    ASSERT_EQ(ev(325, p), ev(470, p));
    int even_def = 0, odd_exc = 0;
    for (int i = 1; i <= 5; ++i) {
      even_def += i % 2 == 0 && p(i) < i;
      odd_exc += i % 2 == 1 && p(i) > i;
    }
    ASSERT_EQ(ev(1439, p), even_def + odd_exc + ev(22, p));
    ASSERT_EQ(ev("reflection_trace", p), ev(22, p) - 1);
  }
}

TEST(Statistics, ValueRanges) {
  const auto& registry = StatisticRegistry::builtin();
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_symmetric_group(n))
      for (const auto& e : registry.entries()) {
        const Integer v = e.evaluate(p);
        ASSERT_GE(v, e.id == StatisticId("reflection_trace") ? -1 : 0) << e.id.str() << " " << to_string(p);
      }
}

TEST(Statistics, ParityMismatchCountIsEven) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_symmetric_group(n)) {
      int odd = 0;
      for (int i = 1; i <= n; ++i) odd += (i + p(i)) % 2;
      ASSERT_EQ(odd % 2, 0);
      ASSERT_EQ(2 * ev(1801, p), odd);
    }
}

TEST(Statistics, Lcm1293IsExact) {
  // n = 8 uses lcm{1..16} = 720720
  EXPECT_EQ(evaluate(1293, Permutation::identity(8)),
            Integer(720720 / 2 + 720720 / 4 + 720720 / 6 + 720720 / 8 + 720720 / 10 + 720720 / 12 + 720720 / 14 +
                    720720 / 16));
  EXPECT_NO_THROW(evaluate(1293, Permutation::identity(40)));
}

TEST(Registry, Listing) {
  const auto list = list_statistics();
  EXPECT_GE(list.size(), 40u);
  std::set<StatisticId> ids;
  for (const auto& [id, description] : list) ids.insert(id);
  EXPECT_EQ(ids.size(), list.size());
  EXPECT_TRUE(std::is_sorted(list.begin(), list.end(), [](auto& a, auto& b) { return a.first < b.first; }));
  const auto& fp = StatisticRegistry::builtin().at(22);
  EXPECT_NE(fp.description.find("fixed point"), std::string::npos);
  for (int id : {54, 740, 1806, 1807, 22, 237, 241, 236, 239, 235, 238, 240, 242, 648, 649, 673, 155, 703, 213, 702,
                 711, 710, 1439, 29, 830, 55, 341, 828, 342, 1285, 1287, 1288, 1293, 1801, 21, 245, 470, 325, 1520, 1114})
    EXPECT_TRUE(StatisticRegistry::builtin().contains(id)) << id;
  for (const char* name : {"odd_ascents", "inversion_number", "reflection_trace"})
    EXPECT_TRUE(StatisticRegistry::builtin().contains(name)) << name;
}

TEST(Registry, UnknownIdListsKnownOnes) {
  try {
    (void)evaluate(18, P("12"));
    FAIL() << "expected out_of_range";
  } catch (const std::out_of_range& e) {
    EXPECT_NE(std::string(e.what()).find("1293"), std::string::npos);
  }
}

TEST(StatisticIdTest, Parse) {
  EXPECT_EQ(StatisticId::parse("22"), StatisticId(22));
  EXPECT_EQ(StatisticId::parse("odd_ascents"), StatisticId("odd_ascents"));
  EXPECT_EQ(StatisticId(22).findstat_number(), 22);
  EXPECT_FALSE(StatisticId("odd_ascents").findstat_number());
  EXPECT_LT(StatisticId(1520), StatisticId("inversion_number"));
  EXPECT_EQ(StatisticId(1520).str(), "1520");
}
