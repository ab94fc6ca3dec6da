#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cperm/cli.hpp"
#include "cperm/constraints.hpp"
#include "cperm/generator.hpp"
#include "cperm/oracle.hpp"
#include "cperm/parser.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace cperm {
namespace {

std::vector<std::u32string> rows_as_strings(const PermittedMatrix& pm) {
  std::vector<std::u32string> rows;
  rows.reserve(pm.size());
  for (const auto& row : pm.rows()) rows.push_back(row.to_word());
  return rows;
}

PermittedMatrix matrix_from_strings(const std::vector<std::u32string>& rows) {
  std::vector<SymbolSet> sets;
  sets.reserve(rows.size());
  for (const auto& r : rows) sets.emplace_back(r);
  return PermittedMatrix(std::move(sets));
}

}  // namespace
}  // namespace cperm

PYBIND11_MODULE(_core, m) {
  using namespace cperm;
  m.doc() = "Constrained, duplicate-free permutation enumeration";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> parse_error;
  parse_error.call_once_and_store_result([&]() {
    return py::object(py::exception<ParseError>(m, "ParseError", PyExc_ValueError));
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object type = parse_error.get_stored();
      py::object err = type(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      err.attr("message") = e.message();
      err.attr("snippet") = e.snippet();
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::enum_<ConstraintKind>(m, "ConstraintKind")
      .value("ALLOWED", ConstraintKind::Allowed)
      .value("FORBIDDEN", ConstraintKind::Forbidden);

  py::class_<PositionConstraint>(m, "PositionConstraint")
      .def(py::init([](std::size_t position, ConstraintKind kind,
                       const std::u32string& symbols) {
             return PositionConstraint{position, kind, SymbolSet(symbols)};
           }),
           "position"_a, "kind"_a, "symbols"_a)
      .def_readwrite("position", &PositionConstraint::position)
      .def_readwrite("kind", &PositionConstraint::kind)
      .def_property_readonly("symbols", [](const PositionConstraint& c) {
        return c.symbols.to_word();
      })
      .def(py::self == py::self);

  py::class_<ConstraintSet>(m, "ConstraintSet")
      .def(py::init([](std::vector<PositionConstraint> constraints, std::size_t length) {
             return ConstraintSet{std::move(constraints), length};
           }),
           "constraints"_a, "length"_a)
      .def_readwrite("constraints", &ConstraintSet::constraints)
      .def_readwrite("length", &ConstraintSet::length)
      .def(py::self == py::self);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("conflicts", &ValidationReport::conflicts)
      .def_readonly("out_of_bounds", &ValidationReport::out_of_bounds)
      .def_readonly("empty_sets", &ValidationReport::empty_sets)
      .def_property_readonly("ok", &ValidationReport::ok)
      .def("describe", &ValidationReport::describe);

  py::class_<PermittedMatrix>(m, "PermittedMatrix")
      .def(py::init(&matrix_from_strings), "rows"_a)
      .def_static("unconstrained",
                  [](const std::u32string& s) {
                    return PermittedMatrix::unconstrained(alphabet_of(s), s.size());
                  },
                  "s"_a, "Every position permits every symbol of s.")
      .def_property_readonly("rows", &rows_as_strings)
      .def("__len__", &PermittedMatrix::size)
      .def("admits", [](const PermittedMatrix& pm, const std::u32string& w) {
        return pm.admits(w);
      })
      .def(py::self == py::self);

  py::class_<GenStats>(m, "GenStats")
      .def_readonly("calls", &GenStats::calls)
      .def_readonly("emitted", &GenStats::emitted)
      .def_readonly("dead_ends", &GenStats::dead_ends)
      .def_readonly("partial", &GenStats::partial)
      .def("__repr__", [](const GenStats& s) {
        std::ostringstream os;
        os << "GenStats(calls=" << s.calls << ", emitted=" << s.emitted
           << ", dead_ends=" << s.dead_ends
           << ", partial=" << (s.partial ? "True" : "False") << ")";
        return os.str();
      });

  py::class_<PermutationStream>(m, "PermutationStream")
      .def("__iter__", [](PermutationStream& s) -> PermutationStream& { return s; })
      .def("__next__",
           [](PermutationStream& s) {
             if (!s.advance()) throw py::stop_iteration();
             return s.current();
           })
      .def_property_readonly("stats", &PermutationStream::stats)
      .def_property_readonly("exhausted", &PermutationStream::exhausted)
      .def_property_readonly("symbol_order", &PermutationStream::symbol_order);

  m.def("alphabet_of",
        [](const std::u32string& s) { return alphabet_of(s).symbols().to_word(); },
        "s"_a, "Distinct symbols of s, ascending.");
  m.def("validate", &validate, "cs"_a);
  m.def("normalize",
        [](const ConstraintSet& cs, const std::u32string& s) {
          return normalize(cs, alphabet_of(s));
        },
        "cs"_a, "s"_a,
        "Permitted matrix for constraints over the alphabet of s. Raises "
        "ValueError if validate(cs) is not ok.");
  m.def("parse", [](const std::string& text, std::size_t n) { return parse(text, n); },
        "text"_a, "n"_a);
  m.def("render", &render, "cs"_a);

  m.def("generate",
        [](const std::u32string& s, const PermittedMatrix& pm, bool sort_input) {
          return PermutationStream(s, pm, {.sort_input = sort_input});
        },
        "s"_a, "pm"_a, "sort_input"_a = true);
  m.def("count",
        [](const std::u32string& s, const PermittedMatrix& pm) { return count(s, pm); },
        "s"_a, "pm"_a);

  auto oracle_mod = m.def_submodule("oracle", "Brute-force reference enumeration");
  py::class_<oracle::OracleResult>(oracle_mod, "OracleResult")
      .def_readonly("outputs", &oracle::OracleResult::outputs)
      .def_readonly("total_distinct", &oracle::OracleResult::total_distinct);
  oracle_mod.def("distinct_permutations",
                 [](const std::u32string& s) { return oracle::distinct_permutations(s); },
                 "s"_a);
  oracle_mod.def("filter", &oracle::filter, "perms"_a, "pm"_a);
  oracle_mod.def("solve",
                 [](const std::u32string& s, const PermittedMatrix& pm) {
                   return oracle::solve(s, pm);
                 },
                 "s"_a, "pm"_a);

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "cperm");
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        "args"_a, "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
