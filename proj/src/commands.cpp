#include "permhom/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

#include <json.hpp>

#include "permhom/formulas.hpp"
#include "permhom/homomesy.hpp"
#include "permhom/orbit_engine.hpp"

namespace permhom {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

bool is_sweep(const std::vector<std::string>& specs) {
  return std::find(specs.begin(), specs.end(), "coxeter-all") != specs.end();
}

void check_generator_spec(const std::string& spec) {
  if (spec == "coxeter-all") return;
  try {
    (void)OrbitGenerator::parse(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Writes records in the configured format; text and csv get a header or
// summary as appropriate.
class RecordSink {
public:
  RecordSink(const RunConfig& config, std::ostream& out, bool with_expected)
      : config_(config), out_(out), with_expected_(with_expected) {
    if (config_.format == OutputFormat::Csv) out_ << csv_header(with_expected_, config_.timing) << '\n';
  }

  void write(const ReportRecord& record) {
    switch (config_.format) {
      case OutputFormat::Text: out_ << to_text_line(record) << '\n'; break;
      case OutputFormat::JsonLines: out_ << to_json_line(record) << '\n'; break;
      case OutputFormat::Csv: out_ << to_csv_row(record, with_expected_, config_.timing) << '\n'; break;
    }
  }

private:
  const RunConfig& config_;
  std::ostream& out_;
  bool with_expected_;
};

ReportRecord make_record(int n, const OrbitGenerator& gen, const StatisticId& id, HomomesyVerdict verdict) {
  ReportRecord r;
  r.n = n;
  r.generator = gen.name();
  r.stat_id = id;
  r.stat_name = StatisticRegistry::builtin().at(id).name;
  r.verdict = std::move(verdict);
  return r;
}

void write_summary(const RunConfig& config, std::ostream& out, std::ostream& err, const std::string& line) {
  (config.format == OutputFormat::Text ? out : err) << line << '\n';
}

}  // namespace

int RunConfig::effective_guard() const {
  return max_n_guard.value_or(is_sweep(generators) ? kDefaultSweepGuard : kDefaultRunGuard);
}

void RunConfig::validate() const {
  if (n_min < 1) throw UsageError("--n must be at least 1");
  if (n_max < n_min) throw UsageError("--n-max must not be below --n");
  if (workers < 1) throw UsageError("--workers must be positive");
  if (max_n_guard && *max_n_guard < 1) throw UsageError("--max-n-guard must be positive");
  if (generators.empty()) throw UsageError("at least one --gen is required");
  for (const auto& spec : generators) {
    check_generator_spec(spec);
    if (spec.starts_with("coxeter:")) {
      const int size = OrbitGenerator::parse(spec).cycle()->size();
      if (n_min != size || n_max != size)
        throw UsageError("generator " + spec + " only acts on S_" + std::to_string(size) +
                         "; use --n " + std::to_string(size) + " or coxeter-all");
    }
  }
  (void)expand_statistics(statistics);
  if (n_max > effective_guard())
    throw GuardExceeded("n = " + std::to_string(n_max) + " exceeds the guard of " +
                        std::to_string(effective_guard()) + " (raise it with --max-n-guard)");
}

std::vector<OrbitGenerator> expand_generators(const std::vector<std::string>& specs, int n) {
  std::vector<OrbitGenerator> out;
  for (const auto& spec : specs) {
    if (spec == "coxeter-all") {
      for (auto& cycle : n_cycles(n)) out.push_back(OrbitGenerator::right_multiply(std::move(cycle)));
    } else {
      check_generator_spec(spec);
      out.push_back(OrbitGenerator::parse(spec));
    }
  }
  return out;
}

std::vector<StatisticId> expand_statistics(const std::vector<std::string>& specs) {
  const auto& registry = StatisticRegistry::builtin();
  std::vector<StatisticId> out;
  auto push = [&](const StatisticId& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& spec : specs) {
    if (spec == "all") {
      for (const auto& id : registry.ids()) push(id);
      continue;
    }
    const StatisticId id = StatisticId::parse(spec);
    if (!registry.contains(id)) {
      try {
        registry.at(id);
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
    }
    push(id);
  }
  if (out.empty()) throw UsageError("no statistics requested");
  return out;
}

int cmd_search(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const auto ids = expand_statistics(config.statistics);
  const EngineOptions options{config.workers, config.effective_guard()};
  RecordSink sink(config, out, false);
  std::size_t total = 0;
  std::size_t homomesic = 0;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (const auto& gen : expand_generators(config.generators, n)) {
      const auto start = Clock::now();
      auto verdicts = survey(n, gen, ids, options);
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      for (std::size_t s = 0; s < ids.size(); ++s) {
        ReportRecord record = make_record(n, gen, ids[s], std::move(verdicts[s]));
        if (config.timing) record.elapsed_ms = ms;
        ++total;
        homomesic += record.verdict.is_homomesic();
        sink.write(record);
      }
    }
  }
  write_summary(config, out, err,
                "summary: " + std::to_string(homomesic) + " of " + std::to_string(total) + " checks homomesic");
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const auto requested = expand_statistics(config.statistics);
  const std::set<StatisticId> wanted(requested.begin(), requested.end());
  const EngineOptions options{config.workers, config.effective_guard()};
  RecordSink sink(config, out, true);
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (const auto& gen : expand_generators(config.generators, n)) {
      std::vector<const FormulaRow*> rows;
      for (const FormulaRow* row : FormulaTable::builtin().rows_for(formula_family(gen.family()), n))
        if (wanted.contains(row->id)) rows.push_back(row);
      if (rows.empty()) continue;
      std::vector<StatisticId> ids;
      for (const FormulaRow* row : rows) ids.push_back(row->id);

      const auto start = Clock::now();
      auto verdicts = survey(n, gen, ids, options);
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      for (std::size_t s = 0; s < rows.size(); ++s) {
        ReportRecord record = make_record(n, gen, ids[s], std::move(verdicts[s]));
        record.expected = rows[s]->value(n);
        if (config.timing) record.elapsed_ms = ms;
        ++checks;
        mismatches += !record.matches_expected();
        sink.write(record);
      }
    }
  }
  write_summary(config, out, err,
                "verify: " + std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches");
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_orbits(const OrbitsConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (config.n < 1) throw UsageError("--n must be at least 1");
  if (config.generator == "coxeter-all") throw UsageError("orbits takes a single generator, not coxeter-all");
  check_generator_spec(config.generator);
  const OrbitGenerator gen = OrbitGenerator::parse(config.generator);
  if (gen.cycle() && gen.cycle()->size() != config.n)
    throw UsageError("generator " + config.generator + " does not act on S_" + std::to_string(config.n));

  if (config.seed) {
    Permutation seed = [&] {
      try {
        return parse_permutation(*config.seed);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed seed: ") + e.what());
      }
    }();
    if (seed.size() != config.n)
      throw UsageError("seed " + *config.seed + " is not in S_" + std::to_string(config.n));
    const Orbit orbit = orbit_of(gen, seed);
    if (config.format == OutputFormat::JsonLines) {
      Json j;
      j["n"] = config.n;
      j["generator"] = gen.name();
      j["seed"] = to_string(seed);
      j["size"] = orbit.size();
      Json members = Json::array();
      for (const auto& m : orbit.members()) members.push_back(to_string(m));
      j["members"] = std::move(members);
      out << j.dump() << '\n';
    } else if (config.format == OutputFormat::Csv) {
      out << "index,member\n";
      for (std::size_t k = 0; k < orbit.size(); ++k) out << k << ',' << csv_escape(to_string(orbit.members()[k])) << '\n';
    } else {
      out << "orbit of " << to_string(seed) << " under " << gen.name() << " in S_" << config.n << ": " << orbit.size()
          << " members\n";
      for (const auto& m : orbit.members()) out << to_string(m) << '\n';
      if (gen.has_step()) out << "-> " << to_string(gen.step(orbit.members().back())) << " (back to seed)\n";
    }
    return kExitOk;
  }

  const int guard = config.max_n_guard.value_or(kDefaultRunGuard);
  if (config.n > guard)
    throw GuardExceeded("n = " + std::to_string(config.n) + " exceeds the guard of " + std::to_string(guard) +
                        " (raise it with --max-n-guard)");
  const auto d = decompose(config.n, gen, EngineOptions{config.workers, guard});
  const auto histogram = size_histogram(d);
  if (config.format == OutputFormat::JsonLines) {
    Json j;
    j["n"] = config.n;
    j["generator"] = gen.name();
    j["orbit_count"] = d.orbits.size();
    Json h = Json::object();
    for (const auto& [size, count] : histogram) h[std::to_string(size)] = count;
    j["histogram"] = std::move(h);
    if (config.members) {
      Json orbits = Json::array();
      for (const auto& orbit : d.orbits) {
        Json members = Json::array();
        for (const auto& m : orbit.members()) members.push_back(to_string(m));
        orbits.push_back(std::move(members));
      }
      j["orbits"] = std::move(orbits);
    }
    out << j.dump() << '\n';
  } else if (config.format == OutputFormat::Csv) {
    out << "size,count\n";
    for (const auto& [size, count] : histogram) out << size << ',' << count << '\n';
  } else {
    out << "S_" << config.n << " under " << gen.name() << ": " << d.orbits.size() << " orbits\n";
    for (const auto& [size, count] : histogram) out << "size " << size << ": " << count << '\n';
    if (config.members) {
      for (const auto& orbit : d.orbits) {
        out << '{';
        for (std::size_t k = 0; k < orbit.size(); ++k) out << (k ? " " : "") << to_string(orbit.members()[k]);
        out << "}\n";
      }
    }
  }
  return kExitOk;
}

int cmd_registry(OutputFormat format, std::ostream& out) {
  const auto& entries = StatisticRegistry::builtin().entries();
  switch (format) {
    case OutputFormat::JsonLines:
      for (const auto& e : entries) {
        Json j;
        j["id"] = e.id.str();
        j["name"] = e.name;
        j["description"] = e.description;
        j["conventions"] = e.conventions;
        out << j.dump() << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "id,name,description,conventions\n";
      for (const auto& e : entries)
        out << csv_escape(e.id.str()) << ',' << csv_escape(e.name) << ',' << csv_escape(e.description) << ','
            << csv_escape(e.conventions) << '\n';
      break;
    case OutputFormat::Text:
      for (const auto& e : entries) {
        out << e.id.str() << '\t' << e.name << '\t' << e.description;
        if (!e.conventions.empty()) out << " [" << e.conventions << ']';
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_formulas(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (config.n_min < 1) throw UsageError("--n must be at least 1");
  if (config.n_max < config.n_min) throw UsageError("--n-max must not be below --n");
  std::set<FormulaFamily> families;
  for (const auto& spec : config.generators) {
    try {
      families.insert(parse_formula_family(spec));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto requested = expand_statistics(config.statistics);
  const std::set<StatisticId> wanted(requested.begin(), requested.end());
  if (config.format == OutputFormat::Csv) out << "n,family,stat_id,stat_name,constant,expression\n";
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (const auto& row : FormulaTable::builtin().rows()) {
      if (!families.contains(row.family) || !wanted.contains(row.id) || !row.applies_to(n)) continue;
      const std::string name = StatisticRegistry::builtin().at(row.id).name;
      const std::string constant = to_string(row.value(n));
      switch (config.format) {
        case OutputFormat::JsonLines: {
          Json j;
          j["n"] = n;
          j["generator"] = to_string(row.family);
          j["stat_id"] = row.id.str();
          j["stat_name"] = name;
          j["verdict"] = "homomesic";
          j["constant"] = constant;
          j["expression"] = row.expression;
          out << j.dump() << '\n';
          break;
        }
        case OutputFormat::Csv:
          out << n << ',' << to_string(row.family) << ',' << csv_escape(row.id.str()) << ',' << csv_escape(name)
              << ',' << constant << ',' << csv_escape(row.expression) << '\n';
          break;
        case OutputFormat::Text:
          out << "n=" << n << " family=" << to_string(row.family) << " stat=" << row.id.str() << " (" << name
              << "): " << constant << "   = " << row.expression << '\n';
          break;
      }
    }
  }
  return kExitOk;
}

}  // namespace permhom
