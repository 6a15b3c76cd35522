#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cytk/census.hpp"
#include "cytk/report.hpp"

namespace py = pybind11;

namespace {

cytk::WeightSystem make_ws(cytk::Integer degree, const std::vector<cytk::Integer>& w) {
  if (w.size() != cytk::kNumWeights) throw std::invalid_argument("expected five weights");
  return cytk::WeightSystem(degree, {w[0], w[1], w[2], w[3], w[4]});
}

std::string run_action(const std::string& label, const std::vector<cytk::AffineTorusMap>& gens,
                       const cytk::DuValMultiset* expected, std::size_t cap) {
  const auto action = cytk::close_group(gens, label, cap);
  return cytk::dump(cytk::torus_json(action, cytk::quotient_singularities(action), expected));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact singularity computations; the report functions return JSON text.";

  py::register_exception<cytk::TorusError>(m, "TorusError", PyExc_ValueError);

  m.def("is_partitionable", [](cytk::Integer target, const std::vector<cytk::Integer>& parts) {
    return cytk::is_partitionable(target, parts);
  });
  m.def("is_quasismooth", [](cytk::Integer d, const std::vector<cytk::Integer>& w) {
    return cytk::is_quasismooth(make_ws(d, w));
  });
  m.def("analyze", [](cytk::Integer d, const std::vector<cytk::Integer>& w) {
    return cytk::dump(cytk::analyze_json(make_ws(d, w)));
  });
  m.def(
      "census",
      [](const std::string& text, std::size_t jobs) {
        std::istringstream in(text);
        cytk::CensusOptions options;
        options.jobs = jobs;
        cytk::CensusResult result;
        {
          py::gil_scoped_release release;
          result = cytk::run_census(in, options);
        }
        return cytk::dump(cytk::census_json(result));
      },
      py::arg("text"), py::arg("jobs") = 1);
  m.def("orbifold_c2", [](const std::string& multiset) {
    return cytk::to_string(cytk::orbifold_c2(cytk::DuValMultiset::parse(multiset)));
  });
  m.def("surface", [](const std::string& multiset) {
    return cytk::dump(cytk::surface_json(cytk::DuValMultiset::parse(multiset)));
  });
  m.def("enumerate_zero_c2", [] { return cytk::dump(cytk::enumerate_json(cytk::enumerate_zero_c2())); });
  m.def("builtin_actions", [] { return cytk::dump(cytk::builtins_json()); });
  m.def(
      "torus_quotient_builtin",
      [](const std::string& name, std::size_t cap) {
        const cytk::BuiltinAction* b = cytk::find_builtin(name);
        if (!b) throw std::invalid_argument("unknown built-in action '" + name + "'");
        const auto& expected = cytk::classitor_entries().at(static_cast<std::size_t>(b->entry - 1)).multiset;
        return run_action(b->name, b->generators, &expected, cap);
      },
      py::arg("name"), py::arg("cap") = cytk::kDefaultGroupCap);
  m.def(
      "torus_quotient_json",
      [](const std::string& action_json, std::size_t cap) {
        std::istringstream in(action_json);
        auto [label, gens] = cytk::read_action(in);
        return run_action(label, gens, nullptr, cap);
      },
      py::arg("action_json"), py::arg("cap") = cytk::kDefaultGroupCap);
}
