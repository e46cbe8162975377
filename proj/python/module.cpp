#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "filtcat/api.hpp"
#include "filtcat/error.hpp"
#include "filtcat/instance.hpp"
#include "filtcat/verify.hpp"

namespace py = pybind11;
using namespace filtcat;

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations with functors on finite directed posets "
              "and their filtered reflections";

    py::register_exception<Error>(m, "FiltcatError", PyExc_ValueError);

    m.def(
        "run",
        [](const std::string& command, const std::vector<std::string>& args,
           const std::string& in_path, const std::string& name, const std::string& kind,
           const std::string& cat, const std::string& suite, std::size_t trials,
           std::uint64_t seed, const std::string& out_path) {
            CommandRequest req;
            req.command = command;
            req.args = args;
            req.in_path = in_path;
            req.name = name;
            req.kind = kind;
            req.cat = cat;
            req.suite = suite;
            req.trials = trials;
            req.seed = seed;
            req.out_path = out_path;
            CommandResult res = run_command(req);
            return py::make_tuple(res.ok, res.text, res.json_text);
        },
        py::arg("command"), py::arg("args") = std::vector<std::string>{},
        py::arg("in_path") = "", py::arg("name") = "", py::arg("kind") = "",
        py::arg("cat") = "filt", py::arg("suite") = "", py::arg("trials") = 200,
        py::arg("seed") = 42, py::arg("out_path") = "",
        "Run one command; returns (ok, text, json_text).");

    m.def("command_names", [] { return command_names(); },
          "Names of the available commands.");

    m.def("verify_suites", [] { return verify_suites(); },
          "Ids of the verification suites, in display order.");

    m.def(
        "canonical_text",
        [](const std::string& text) { return instance_text(parse_instance_text(text)); },
        py::arg("text"),
        "Parse an instance file body and reprint it in canonical form.");
}
