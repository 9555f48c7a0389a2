#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "permhom/commands.hpp"
#include "permhom/formulas.hpp"
#include "permhom/homomesy.hpp"

namespace py = pybind11;
using namespace permhom;

namespace {

// Statistic ids arrive as int or str.
StatisticId stat_id(const py::handle& h) { return StatisticId::parse(py::str(h).cast<std::string>()); }

py::object py_int(const Integer& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(to_string(v).c_str(), nullptr, 10)); }

EngineOptions engine(int workers, int max_n) { return EngineOptions{workers, max_n}; }

py::dict summary(const OrbitSummary& s) {
  py::dict d;
  d["seed"] = s.seed;
  d["size"] = s.size;
  d["average"] = to_string(s.average);
  return d;
}

py::dict verdict_dict(const HomomesyVerdict& v) {
  py::dict d;
  d["homomesic"] = v.is_homomesic();
  d["orbit_count"] = v.orbit_count;
  if (v.is_homomesic()) {
    d["constant"] = to_string(v.constant());
  } else {
    d["witnesses"] = py::make_tuple(summary(v.witnesses().first), summary(v.witnesses().second));
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exhaustive homomesy checks for maps on permutations";

  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("word"))
      .def(py::init([](const std::string& text) { return parse_permutation(text); }), py::arg("text"))
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("word", [](const Permutation& p) { return std::vector<int>(p.word().begin(), p.word().end()); })
      .def("__len__", &Permutation::size)
      .def("__call__", &Permutation::at)
      .def("__str__", [](const Permutation& p) { return to_string(p); })
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + to_string(p) + "')"; })
      .def("__hash__", [](const Permutation& p) { return std::hash<Permutation>{}(p); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("cycles", &cycle_decomposition)
      .def("rank", &rank);

  m.def("compose", &compose);
  m.def("inverse", &inverse);
  m.def("simple_transposition", &simple_transposition);
  m.def("long_cycle", &long_cycle);
  m.def("cycle_from_toggle_order", [](const std::vector<int>& order) { return cycle_from_toggle_order(order); });
  m.def("coxeter_elements", &coxeter_elements);
  m.def("n_cycles", &n_cycles);
  m.def("symmetric_group", &enumerate_symmetric_group, py::arg("n"), py::arg("max_n") = kDefaultEnumerationGuard);

  m.def("rotate", &rotate);
  m.def("pair_swap", &pair_swap);
  m.def("parity_rotate", &parity_rotate);
  m.def("parity_rotate_inverse", &parity_rotate_inverse);
  m.def("foata_strehl_toggle", &foata_strehl_toggle);
  m.def("togglable_set", &togglable_set);
  m.def("orbit", [](const std::string& gen, const Permutation& p) { return orbit_of(OrbitGenerator::parse(gen), p).members(); },
        py::arg("generator"), py::arg("seed"));
  m.def(
      "decompose",
      [](int n, const std::string& gen, int workers, int max_n) {
        std::vector<std::vector<Permutation>> out;
        for (const auto& o : decompose(n, OrbitGenerator::parse(gen), engine(workers, max_n)).orbits)
          out.push_back(o.members());
        return out;
      },
      py::arg("n"), py::arg("generator"), py::arg("workers") = 1, py::arg("max_n") = kDefaultEnumerationGuard);

  m.def("evaluate", [](const py::handle& id, const Permutation& p) { return py_int(evaluate(stat_id(id), p)); });
  m.def("list_statistics", [] {
    std::vector<py::dict> out;
    for (const auto& e : StatisticRegistry::builtin().entries()) {
      py::dict d;
      d["id"] = e.id.str();
      d["name"] = e.name;
      d["description"] = e.description;
      d["conventions"] = e.conventions;
      out.push_back(d);
    }
    return out;
  });

  m.def(
      "check_homomesy",
      [](int n, const std::string& gen, const py::handle& id, int workers, int max_n) {
        return verdict_dict(check_homomesy(n, OrbitGenerator::parse(gen), stat_id(id), engine(workers, max_n)));
      },
      py::arg("n"), py::arg("generator"), py::arg("stat"), py::arg("workers") = 1,
      py::arg("max_n") = kDefaultEnumerationGuard);
  m.def(
      "survey",
      [](int n, const std::string& gen, const std::vector<py::object>& stats, int workers) {
        std::vector<StatisticId> ids;
        for (const auto& s : stats) ids.push_back(stat_id(s));
        if (ids.empty()) ids = StatisticRegistry::builtin().ids();
        py::dict out;
        const auto verdicts = survey(n, OrbitGenerator::parse(gen), ids, engine(workers, kDefaultEnumerationGuard));
        for (std::size_t s = 0; s < ids.size(); ++s) out[py::str(ids[s].str())] = verdict_dict(verdicts[s]);
        return out;
      },
      py::arg("n"), py::arg("generator"), py::arg("stats") = std::vector<py::object>{}, py::arg("workers") = 1);
  m.def("global_average", [](int n, const py::handle& id) { return to_string(global_average(n, stat_id(id))); });
  m.def("reflection_trace_cycle_sum",
        [](const Permutation& p, const Permutation& c) { return py_int(reflection_trace_cycle_sum(p, c)); });
  m.def("expected_average", [](const std::string& family, const py::handle& id, int n) {
    return to_string(expected_average(parse_formula_family(family), stat_id(id), n));
  });

  m.def(
      "verify",
      [](int n_min, int n_max, std::vector<std::string> generators, int workers, const std::string& format) {
        RunConfig c;
        c.n_min = n_min;
        c.n_max = n_max;
        c.generators = std::move(generators);
        c.workers = workers;
        c.format = parse_output_format(format);
        std::ostringstream out, err;
        const int code = cmd_verify(c, out, err);
        return py::make_tuple(code, out.str());
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("generators"), py::arg("workers") = 1,
      py::arg("format") = "json-lines");
}
