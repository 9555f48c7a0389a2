#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "permhom/homomesy.hpp"
#include "permhom/statistics.hpp"

namespace permhom {

enum class OutputFormat { Text, JsonLines, Csv };

/// "text", "json-lines" (or "jsonl"), "csv".
OutputFormat parse_output_format(std::string_view text);

/// One homomesy result for a (n, generator, statistic) triple.
///
/// json-lines schema, one object per line, keys in this order:
///   n            integer
///   generator    generator name ("rot", "coxeter:2341", "ps", "parrot", "vh")
///   stat_id      FindStat number or symbolic name, as a string
///   stat_name    registry handle
///   verdict      "homomesic" | "not_homomesic"
///   orbit_count  integer
///   constant     rational string, homomesic only
///   witnesses    [{seed, size, average}, {seed, size, average}], not_homomesic only
///   expected     rational string, verify runs only
///   status       "ok" | "mismatch", verify runs only
///   elapsed_ms   number, only when timing was requested
/// Rationals are written "p/q", or "p" when integral.
struct ReportRecord {
  int n = 0;
  std::string generator;
  StatisticId stat_id = 0;
  std::string stat_name;
  HomomesyVerdict verdict;
  std::optional<Rational> expected;
  std::optional<double> elapsed_ms;

  /// Verify runs: homomesic with exactly the expected constant.
  bool matches_expected() const;
};

std::string to_json_line(const ReportRecord& record);

/// Inverse of to_json_line. Throws std::invalid_argument on schema errors.
ReportRecord parse_json_line(std::string_view line);

/// Fixed columns n,generator,stat_id,stat_name,verdict,constant,
/// witness_a_seed,witness_a_avg,witness_b_seed,witness_b_avg, followed by
/// expected,status for verify runs and elapsed_ms when timing.
std::string csv_header(bool with_expected, bool with_elapsed);
std::string to_csv_row(const ReportRecord& record, bool with_expected, bool with_elapsed);

std::string to_text_line(const ReportRecord& record);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

}  // namespace permhom
