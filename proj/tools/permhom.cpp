// permhom: exhaustive homomesy search over permutation maps.
//
//   permhom search  --n 3 --n-max 6 --gen rot --stats all --format json-lines
//   permhom verify  --n 3 --n-max 5 --gen coxeter-all
//   permhom orbits  --n 6 --gen vh --seed 246135
//   permhom registry
//   permhom formulas --n 4 --gen parrot

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permhom/commands.hpp"

namespace {

struct Flags {
  int n = 3;
  std::optional<int> n_max;
  std::vector<std::string> gens;
  std::vector<std::string> stats;
  std::string format = "text";
  std::string out;
  int workers = 1;
  std::optional<int> guard;
  bool timing = false;
  std::optional<std::string> seed;
  bool members = false;
};

void add_range(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "Smallest n (default 3)");
  cmd->add_option("--n-max", f.n_max, "Largest n (default: --n)");
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text, json-lines or csv")->check(CLI::IsMember({"text", "json-lines", "jsonl", "csv"}));
  cmd->add_option("--out", f.out, "Write the report here instead of stdout");
}

void add_run(CLI::App* cmd, Flags& f) {
  add_range(cmd, f);
  cmd->add_option("--gen", f.gens, "rot, coxeter:<word>, coxeter-all, ps, parrot, vh (repeatable)")->take_all();
  cmd->add_option("--stats", f.stats, "Statistic ids or 'all'")->delimiter(',');
  add_common(cmd, f);
  cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--max-n-guard", f.guard, "Largest n allowed (default 8, 6 with coxeter-all)");
  cmd->add_flag("--timing", f.timing, "Add elapsed_ms to every record");
}

permhom::RunConfig run_config(const Flags& f) {
  permhom::RunConfig c;
  c.n_min = f.n;
  c.n_max = f.n_max.value_or(f.n);
  if (!f.gens.empty()) c.generators = f.gens;
  if (!f.stats.empty()) c.statistics = f.stats;
  c.format = permhom::parse_output_format(f.format);
  c.workers = f.workers;
  c.max_n_guard = f.guard;
  c.timing = f.timing;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive homomesy search for maps on permutations"};
  app.require_subcommand(1);
  Flags f;

  auto* search = app.add_subcommand("search", "Check statistics for homomesy");
  add_run(search, f);
  auto* verify = app.add_subcommand("verify", "Compare the engine with the formula table");
  add_run(verify, f);

  auto* orbits = app.add_subcommand("orbits", "Print one orbit or the orbit size histogram");
  orbits->add_option("--n", f.n, "Size of the permutations");
  orbits->add_option("--gen", f.gens, "Generator spec")->expected(1);
  orbits->add_option("--seed", f.seed, "Print the orbit of this permutation");
  orbits->add_flag("--members", f.members, "List every orbit of the decomposition");
  add_common(orbits, f);
  orbits->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  orbits->add_option("--max-n-guard", f.guard, "Largest n allowed (default 8)");

  auto* registry = app.add_subcommand("registry", "Dump the statistic registry");
  add_common(registry, f);

  auto* formulas = app.add_subcommand("formulas", "Dump the formula table");
  add_range(formulas, f);
  formulas->add_option("--gen", f.gens, "Restrict to these map families")->take_all();
  formulas->add_option("--stats", f.stats, "Statistic ids or 'all'")->delimiter(',');
  add_common(formulas, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? permhom::kExitOk : permhom::kExitUsage;
  }

  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) {
      std::cerr << "error: cannot open " << f.out << " for writing\n";
      return permhom::kExitUsage;
    }
  }
  std::ostream& out = f.out.empty() ? std::cout : file;

  return permhom::run_guarded(std::cerr, [&] {
    if (search->parsed()) return permhom::cmd_search(run_config(f), out, std::cerr);
    if (verify->parsed()) return permhom::cmd_verify(run_config(f), out, std::cerr);
    if (orbits->parsed()) {
      permhom::OrbitsConfig c;
      c.n = f.n;
      if (!f.gens.empty()) c.generator = f.gens.front();
      c.seed = f.seed;
      c.members = f.members;
      c.format = permhom::parse_output_format(f.format);
      c.workers = f.workers;
      c.max_n_guard = f.guard;
      return permhom::cmd_orbits(c, out, std::cerr);
    }
    if (registry->parsed()) return permhom::cmd_registry(permhom::parse_output_format(f.format), out);
    permhom::RunConfig c = run_config(f);
    if (f.gens.empty()) c.generators = {"rot", "ps", "parrot", "vh"};
    return permhom::cmd_formulas(c, out, std::cerr);
  });
}
