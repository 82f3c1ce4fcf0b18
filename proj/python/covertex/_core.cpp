#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vtx/cli.hpp"
#include "vtx/specfile.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact checker for graded vertex coalgebra structures";

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = vtx::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Run the command-line interface; returns (exit_code, stdout, stderr).");

  m.def(
      "roundtrip",
      [](const std::string& text) {
        return vtx::serialize_spec_file(vtx::parse_spec_file(text));
      },
      py::arg("text"),
      "Parse a structure description and return its canonical serialization.");

  py::register_exception<vtx::SpecError>(m, "SpecError");
}
