#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permhom/maps.hpp"
#include "permhom/report.hpp"
#include "permhom/statistics.hpp"

namespace permhom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Default size limits of the batch driver.
inline constexpr int kDefaultRunGuard = 8;
inline constexpr int kDefaultSweepGuard = 6;

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int n_min = 3;
  int n_max = 3;
  /// rot, coxeter:<word>, coxeter-all, ps, parrot, vh
  std::vector<std::string> generators{"rot"};
  /// Statistic ids, or the single entry "all".
  std::vector<std::string> statistics{"all"};
  OutputFormat format = OutputFormat::Text;
  int workers = 1;
  /// Overrides the default guard (8, or 6 when coxeter-all is requested).
  std::optional<int> max_n_guard;
  bool timing = false;

  int effective_guard() const;

  /// Throws UsageError for malformed input and GuardExceeded when n_max is
  /// above the guard.
  void validate() const;
};

/// Generators to run at size n, in request order. "coxeter-all" becomes one
/// right-multiplication generator per n-cycle, in lexicographic order.
std::vector<OrbitGenerator> expand_generators(const std::vector<std::string>& specs, int n);

/// "all" becomes the whole registry in id order; duplicates are dropped.
/// Throws UsageError for unknown ids.
std::vector<StatisticId> expand_statistics(const std::vector<std::string>& specs);

/// One record per (n, generator, statistic), then a summary line (on `out`
/// for text, on `err` otherwise).
int cmd_search(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Checks every applicable proven row against the exhaustive engine. Returns
/// kExitMismatch when any row disagrees.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

struct OrbitsConfig {
  int n = 3;
  std::string generator = "rot";
  std::optional<std::string> seed;
  bool members = false;  // list every orbit of the decomposition
  OutputFormat format = OutputFormat::Text;
  int workers = 1;
  std::optional<int> max_n_guard;
};

/// With a seed, prints that orbit. Otherwise prints the orbit count and size
/// histogram of the full decomposition.
int cmd_orbits(const OrbitsConfig& config, std::ostream& out, std::ostream& err);

int cmd_registry(OutputFormat format, std::ostream& out);

/// Formula table export: one record per applicable (row, n) in the range,
/// restricted to the generators' families and the requested statistics.
int cmd_formulas(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs `body` and converts the library's exceptions to exit codes, writing
/// the diagnostic to `err`.
template <typename Body>
int run_guarded(std::ostream& err, Body body);

}  // namespace permhom

#include <ostream>

#include "permhom/permutation.hpp"

template <typename Body>
int permhom::run_guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
