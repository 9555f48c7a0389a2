// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "permhom/commands.hpp"
#include "permhom/formulas.hpp"
#include "permhom/homomesy.hpp"
#include "permhom/orbit_engine.hpp"

using namespace permhom;

namespace {

const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(std::string(PERMHOM_FIXTURES) + "/oracle.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Rational frozen(const nlohmann::json& j) { return parse_rational(j.get<std::string>()); }

std::vector<StatisticId> rotation_ids(int n) {
  std::vector<StatisticId> ids;
  for (const FormulaRow* row : FormulaTable::builtin().rows_for(FormulaFamily::RotationAndCoxeter, n)) ids.push_back(row->id);
  return ids;
}

// Every verdict homomesic with the table constant, and with the frozen oracle
// value when one is given.
void check_rows(int n, const OrbitGenerator& gen, FormulaFamily family, const std::vector<StatisticId>& ids,
                const nlohmann::json* fixture) {
  const auto verdicts = survey(n, gen, ids);
  for (std::size_t s = 0; s < ids.size(); ++s) {
    const std::string where = gen.name() + " n=" + std::to_string(n) + " stat " + ids[s].str();
    require(verdicts[s].is_homomesic(), where + " not homomesic");
    const Rational expected = expected_average(family, ids[s], n);
    require(verdicts[s].constant() == expected,
            where + ": engine " + to_string(verdicts[s].constant()) + ", table " + to_string(expected));
    if (fixture) {
      const Rational o = frozen(fixture->at(ids[s].str()));
      require(o == expected, where + ": oracle " + to_string(o) + ", table " + to_string(expected));
    }
  }
}

std::string c1() {
  std::size_t checks = 0;
  for (int n = 3; n <= 7; ++n) {
    const auto ids = rotation_ids(n);
    require(n < 4 || ids.size() == 34, "expected 34 rotation rows at n=" + std::to_string(n));
    check_rows(n, OrbitGenerator::rotation(), FormulaFamily::RotationAndCoxeter, ids,
               &oracle().at("rotation").at(std::to_string(n)));
    checks += ids.size();
  }
  require(check_homomesy(3, OrbitGenerator::rotation(), 1293).constant() == make_rational(149, 3), "1293 at n=3");
  for (int n = 3; n <= 7; ++n) {
    require(check_homomesy(n, OrbitGenerator::rotation(), 54).constant() == make_rational(n + 1, 2), "54");
    require(check_homomesy(n, OrbitGenerator::rotation(), 342).constant() == make_rational(n * (n + 1) * (n + 1), 4),
            "342");
  }
  return std::to_string(checks) + " (n, statistic) checks";
}

std::string c2() {
  const auto v = check_homomesy(3, OrbitGenerator::rotation(), "inversion_number");
  require(!v.is_homomesic(), "inversion_number reported homomesic");
  const auto& [a, b] = v.witnesses();
  require(a.average == make_rational(4, 3) && b.average == make_rational(5, 3),
          "witness averages " + to_string(a.average) + ", " + to_string(b.average));
  const auto& fx = oracle().at("negative_control");
  require(to_string(a.seed) == fx[0].at("seed").get<std::string>() &&
              to_string(b.seed) == fx[1].at("seed").get<std::string>(),
          "witness seeds differ from the oracle");
  return "orbits of " + to_string(a.seed) + " and " + to_string(b.seed) + " average 4/3 and 5/3";
}

std::string c3() {
  std::size_t cycles = 0;
  for (int n = 3; n <= 5; ++n) {
    const auto ids = rotation_ids(n);
    const auto& fx = oracle().at("coxeter").at(std::to_string(n));
    const auto all = n_cycles(n);
    require(all.size() == factorial(n - 1), "wrong number of n-cycles");
    for (const auto& c : all) {
      check_rows(n, OrbitGenerator::right_multiply(c), FormulaFamily::RotationAndCoxeter, ids, &fx.at(to_string(c)));
      ++cycles;
    }
  }
  return std::to_string(cycles) + " n-cycles, n = 3..5";
}

std::string c4() {
  std::size_t pairs = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : n_cycles(n))
      for (const auto& p : enumerate_symmetric_group(n)) {
        require(reflection_trace_cycle_sum(p, c) == 0, "nonzero sum at " + to_string(p) + ", " + to_string(c));
        ++pairs;
      }
  return std::to_string(pairs) + " (permutation, cycle) pairs";
}

std::string c5() {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t parrot = n < 3 ? 1 : static_cast<std::size_t>(std::lcm((n + 1) / 2, n / 2));
    for (const auto& o : decompose(n, OrbitGenerator::rotation()).orbits) {
      require(o.size() == static_cast<std::size_t>(n), "rot orbit size");
      require(zeta(o).is_full_square(), "rot zeta at " + to_string(o.first()));
    }
    for (const auto& o : decompose(n, OrbitGenerator::pair_swap()).orbits)
      require(o.size() == (n >= 2 ? 2u : 1u), "ps orbit size");
    for (const auto& o : decompose(n, OrbitGenerator::parity_rotation()).orbits)
      require(o.size() == parrot, "parrot orbit size at n=" + std::to_string(n));
    for (const auto& o : decompose(n, OrbitGenerator::valley_hopping()).orbits)
      require(o.size() == std::size_t{1} << togglable_set(o.first()).size(), "vh orbit size");
    for (const auto& c : n_cycles(n))
      for (const auto& o : decompose(n, OrbitGenerator::right_multiply(c)).orbits)
        require(o.size() == static_cast<std::size_t>(n) && zeta(o).is_full_square(),
                "coxeter zeta at " + to_string(c));
  }
  for (int n = 1; n <= 6; ++n)
    for (int k = 2; k <= 2 * n; ++k) {
      std::int64_t count = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) count += i + j == k;
      require(pair_sum_multiplicity(n, k) == count, "pair sum multiplicity");
    }
  return "n = 1..6, all maps and all n-cycles";
}

std::string c6() {
  for (int n = 2; n <= 8; ++n)
    for (const StatisticId id : {StatisticId(1114), StatisticId("odd_ascents")}) {
      const auto v = check_homomesy(n, OrbitGenerator::pair_swap(), id);
      const Rational want = make_rational(n / 2, 2);
      require(v.is_homomesic() && v.constant() == want, id.str() + " at n=" + std::to_string(n));
      require(frozen(oracle().at("pair_swap").at(std::to_string(n)).at(id.str())) == want, "oracle disagrees");
    }
  std::size_t pinned = 0;
  const auto ids = StatisticRegistry::builtin().ids();
  for (int n = 3; n <= 5; ++n) {
    const auto& fx = oracle().at("pair_swap").at(std::to_string(n));
    const auto verdicts = survey(n, OrbitGenerator::pair_swap(), ids);
    for (std::size_t s = 0; s < ids.size(); ++s) {
      const auto& want = fx.at(ids[s].str());
      const std::string where = "ps n=" + std::to_string(n) + " stat " + ids[s].str();
      if (want.is_null()) {
        require(!verdicts[s].is_homomesic(), where + " falsely homomesic");
      } else {
        require(verdicts[s].is_homomesic() && verdicts[s].constant() == frozen(want), where);
      }
      ++pinned;
    }
  }
  return std::to_string(pinned) + " pinned verdicts for n = 3..5";
}

std::string c7() {
  const auto gen = OrbitGenerator::parity_rotation();
  for (int n : {4, 6}) {
    require(check_homomesy(n, gen, 236).constant() == 2, "236 at n=" + std::to_string(n));
    require(check_homomesy(n, gen, 242).constant() == n - 2, "242 at n=" + std::to_string(n));
  }
  for (int n : {3, 5, 7}) {
    for (int id : {21, 245}) require(check_homomesy(n, gen, id).constant() == make_rational(n - 1, 2), "descents");
    for (int id : {470, 325}) require(check_homomesy(n, gen, id).constant() == make_rational(n + 1, 2), "runs");
    require(check_homomesy(n, gen, 1520).constant() == make_rational(n - 3, 2), "1520 at n=" + std::to_string(n));
    for (const auto& [id, value] : oracle().at("parity_rotation").at(std::to_string(n)).items())
      if (!value.is_null())
        require(check_homomesy(n, gen, StatisticId::parse(id)).constant() == frozen(value), "oracle " + id);
  }
  return "even n = 4, 6 and odd n = 3, 5, 7";
}

std::string c8() {
  const auto orbit = orbit_of(OrbitGenerator::valley_hopping(), parse_permutation("246135"));
  std::set<std::string> got;
  for (const auto& m : orbit.members()) got.insert(to_string(m));
  require(got == std::set<std::string>{"246135", "426135", "246315", "246513", "426315", "426513", "246531", "426531"},
          "orbit of 246135");
  const auto gen = OrbitGenerator::valley_hopping();
  for (int n = 3; n <= 6; ++n) {
    for (int id : {21, 245}) require(check_homomesy(n, gen, id).constant() == make_rational(n - 1, 2), "descents");
    for (int id : {325, 470}) require(check_homomesy(n, gen, id).constant() == make_rational(n + 1, 2), "runs");
  }
  for (const auto& p : enumerate_symmetric_group(5))
    for (int x = 1; x <= 5; ++x) {
      const auto px = foata_strehl_toggle(p, x);
      require(foata_strehl_toggle(px, x) == p, "toggle is not an involution");
      for (int y = 1; y <= 5; ++y)
        require(foata_strehl_toggle(px, y) == foata_strehl_toggle(foata_strehl_toggle(p, y), x), "toggles do not commute");
    }
  return "8-element orbit, n = 3..6, toggles on S_5";
}

std::string c9() {
  for (const auto& p : enumerate_symmetric_group(5)) {
    Integer displacement = 0;
    for (int i = 1; i <= 5; ++i) displacement += p(i) > i ? p(i) - i : i - p(i);
    require(evaluate(29, p) * 2 == displacement, "depth at " + to_string(p));
    require(evaluate(828, p) == 2 * evaluate(55, p), "Spearman at " + to_string(p));
    require(evaluate(341, p) == evaluate(55, reverse(p)), "non-inversion sum at " + to_string(p));
    require(evaluate(470, p) == evaluate(21, p) + 1, "runs at " + to_string(p));
  }
  return "all of S_5";
}

std::string c10() {
  const auto run = [](RunConfig c, int workers) {
    c.workers = workers;
    std::ostringstream out, err;
    const int code = cmd_verify(c, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  std::size_t bytes = 0;
  for (auto format : {OutputFormat::Text, OutputFormat::JsonLines, OutputFormat::Csv}) {
    RunConfig single;
    single.n_min = 3;
    single.n_max = 7;
    single.generators = {"rot", "ps", "parrot", "vh"};
    single.format = format;
    RunConfig sweep = single;
    sweep.n_max = 5;
    sweep.generators = {"coxeter-all"};
    for (const auto& c : {single, sweep}) {
      const auto one = run(c, 1);
      require(one == run(c, 4), "output differs between 1 and 4 workers");
      bytes += one.size();
    }
  }
  return std::to_string(bytes) + " bytes compared";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<std::string()>> criteria[] = {
      {"rotation suite", c1},        {"negative control", c2},  {"coxeter sweep", c3}, {"trace identity", c4},
      {"orbit structure", c5},     {"pair swapping", c6},     {"parity rotation", c7}, {"valley hopping", c8},
      {"identity cross-checks", c9}, {"determinism", c10},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [name, check] : criteria) {
    ++k;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = check();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << " (" << name << "): " << detail << " [" << ms.count()
              << " ms]\n";
    failed += !ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? 1 : 0;
}
