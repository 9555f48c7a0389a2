#include "permhom/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace permhom {

namespace {

using Json = nlohmann::ordered_json;

Json summary_to_json(const OrbitSummary& s) {
  Json j;
  j["seed"] = to_string(s.seed);
  j["size"] = s.size;
  j["average"] = to_string(s.average);
  return j;
}

OrbitSummary summary_from_json(const Json& j) {
  return OrbitSummary{parse_permutation(j.at("seed").get<std::string>()), j.at("size").get<std::size_t>(),
                      parse_rational(j.at("average").get<std::string>())};
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json-lines" || text == "jsonl") return OutputFormat::JsonLines;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "' (expected text, json-lines, csv)");
}

bool ReportRecord::matches_expected() const {
  return expected.has_value() && verdict.is_homomesic() && verdict.constant() == *expected;
}

std::string to_json_line(const ReportRecord& record) {
  Json j;
  j["n"] = record.n;
  j["generator"] = record.generator;
  j["stat_id"] = record.stat_id.str();
  j["stat_name"] = record.stat_name;
  j["verdict"] = record.verdict.is_homomesic() ? "homomesic" : "not_homomesic";
  j["orbit_count"] = record.verdict.orbit_count;
  if (record.verdict.is_homomesic()) {
    j["constant"] = to_string(record.verdict.constant());
  } else {
    const auto& w = record.verdict.witnesses();
    j["witnesses"] = Json::array({summary_to_json(w.first), summary_to_json(w.second)});
  }
  if (record.expected) {
    j["expected"] = to_string(*record.expected);
    j["status"] = record.matches_expected() ? "ok" : "mismatch";
  }
  if (record.elapsed_ms) j["elapsed_ms"] = *record.elapsed_ms;
  return j.dump();
}

ReportRecord parse_json_line(std::string_view line) {
  try {
    const Json j = Json::parse(line);
    ReportRecord r;
    r.n = j.at("n").get<int>();
    r.generator = j.at("generator").get<std::string>();
    r.stat_id = StatisticId::parse(j.at("stat_id").get<std::string>());
    r.stat_name = j.at("stat_name").get<std::string>();
    r.verdict.orbit_count = j.at("orbit_count").get<std::size_t>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "homomesic") {
      r.verdict.outcome = Homomesic{parse_rational(j.at("constant").get<std::string>())};
    } else if (verdict == "not_homomesic") {
      const Json& w = j.at("witnesses");
      if (!w.is_array() || w.size() != 2) throw std::invalid_argument("witnesses must be a pair");
      r.verdict.outcome = NotHomomesic{summary_from_json(w[0]), summary_from_json(w[1])};
    } else {
      throw std::invalid_argument("unknown verdict '" + verdict + "'");
    }
    if (j.contains("expected")) r.expected = parse_rational(j.at("expected").get<std::string>());
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report record: ") + e.what());
  }
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_header(bool with_expected, bool with_elapsed) {
  std::string h = "n,generator,stat_id,stat_name,verdict,constant,witness_a_seed,witness_a_avg,witness_b_seed,witness_b_avg";
  if (with_expected) h += ",expected,status";
  if (with_elapsed) h += ",elapsed_ms";
  return h;
}

std::string to_csv_row(const ReportRecord& record, bool with_expected, bool with_elapsed) {
  std::vector<std::string> f{std::to_string(record.n), record.generator, record.stat_id.str(), record.stat_name};
  if (record.verdict.is_homomesic()) {
    f.insert(f.end(), {"homomesic", to_string(record.verdict.constant()), "", "", "", ""});
  } else {
    const auto& w = record.verdict.witnesses();
    f.insert(f.end(), {"not_homomesic", "", to_string(w.first.seed), to_string(w.first.average),
                       to_string(w.second.seed), to_string(w.second.average)});
  }
  if (with_expected) {
    f.push_back(record.expected ? to_string(*record.expected) : "");
    f.push_back(record.matches_expected() ? "ok" : "mismatch");
  }
  if (with_elapsed) f.push_back(record.elapsed_ms ? format_ms(*record.elapsed_ms) : "");
  std::string row;
  for (std::size_t i = 0; i < f.size(); ++i) row += (i ? "," : "") + csv_escape(f[i]);
  return row;
}

std::string to_text_line(const ReportRecord& record) {
  std::ostringstream os;
  if (record.expected) os << (record.matches_expected() ? "ok       " : "MISMATCH ");
  os << "n=" << record.n << " gen=" << record.generator << " stat=" << record.stat_id.str() << " ("
     << record.stat_name << "): ";
  if (record.verdict.is_homomesic()) {
    os << "homomesic, constant " << to_string(record.verdict.constant());
  } else {
    const auto& w = record.verdict.witnesses();
    os << "not homomesic, orbit of " << to_string(w.first.seed) << " (size " << w.first.size << ") averages "
       << to_string(w.first.average) << ", orbit of " << to_string(w.second.seed) << " (size " << w.second.size
       << ") averages " << to_string(w.second.average);
  }
  os << " [" << record.verdict.orbit_count << " orbits]";
  if (record.expected) os << " expected " << to_string(*record.expected);
  if (record.elapsed_ms) os << " " << format_ms(*record.elapsed_ms) << " ms";
  return os.str();
}

}  // namespace permhom
