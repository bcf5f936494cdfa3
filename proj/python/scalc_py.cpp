#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "scalc/cli.hpp"
#include "scalc/export.hpp"
#include "scalc/hoare.hpp"
#include "scalc/laws.hpp"
#include "scalc/spec_file.hpp"

namespace py = pybind11;
using namespace scalc;

namespace {

Problem problem_from(const std::string& text, const std::optional<std::string>& mode,
                     std::optional<std::size_t> unroll) {
  ProblemOverrides o;
  if (mode) o.mode = parse_mode(*mode);
  o.unroll = unroll;
  return build_problem(parse_spec_file(text, std::filesystem::current_path()), o);
}

}  // namespace

PYBIND11_MODULE(_scalc, m) {
  m.doc() = "Finite-state verifier for total and partial correctness of S programs";

  py::register_exception<Error>(m, "ScalcError");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line with `args` and returns (exit code, stdout, stderr).");

  m.def(
      "verify_json",
      [](const std::string& text, std::optional<std::string> mode) {
        const Problem p = problem_from(text, mode, std::nullopt);
        const StateSpace space = build_space(p.universe, p.max_states);
        return report_to_json(verify(p.program, p.pre, p.post, p.mode, space), space);
      },
      py::arg("text"), py::arg("mode") = py::none());

  m.def(
      "export_smt",
      [](const std::string& text, std::optional<std::string> mode, std::optional<std::size_t> unroll,
         bool allow_partial_unroll) {
        const Problem p = problem_from(text, mode, unroll);
        ExportOptions o;
        o.mode = p.mode;
        o.unroll = p.unroll;
        o.allow_partial_unroll = allow_partial_unroll;
        return export_vc(p.program, p.pre, p.post, p.universe, o).text();
      },
      py::arg("text"), py::arg("mode") = py::none(), py::arg("unroll") = py::none(),
      py::arg("allow_partial_unroll") = false);

  m.def(
      "check_law",
      [](const std::string& id, std::size_t trials, std::vector<std::size_t> sizes, std::uint64_t seed,
         bool exhaustive) {
        LawOptions o;
        o.trials = trials;
        o.sizes = std::move(sizes);
        o.seed = seed;
        o.exhaustive_only = exhaustive;
        const LawResult r = check_law(id, o);
        return py::make_tuple(r.trials, r.violation_count);
      },
      py::arg("id"), py::arg("trials") = 200, py::arg("sizes") = std::vector<std::size_t>{1, 2, 3, 4},
      py::arg("seed") = 0, py::arg("exhaustive") = false, "Returns (trials, violations).");

  m.def("list_laws", [] {
    py::list out;
    for (const auto& l : list_laws()) {
      py::dict d;
      d["id"] = l.id;
      d["kind"] = std::string(to_string(l.kind));
      d["schema"] = l.schema;
      d["statement"] = l.statement;
      out.append(d);
    }
    return out;
  });

  m.def("splitmix64", &splitmix64, py::arg("x"));
  m.def("fnv1a64", [](const std::string& s) { return fnv1a64(s); }, py::arg("text"));
}
