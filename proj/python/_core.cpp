#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liesym/cli.hpp"
#include "liesym/orbit.hpp"

namespace py = pybind11;

namespace {

/// Runs a CLI command with JSON output; returns (exit code, stdout, stderr).
std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
    std::vector<std::string> argv{"liesym"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = liesym::cli::run(argv, out, err);
    }
    return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact optimal systems of subalgebras for the algebras L(k)";
    m.def("run", &run, py::arg("args"), "Run a liesym command line; returns (exit code, stdout, stderr).");
    m.def("subspace_distance", &liesym::subspace_distance, py::arg("a"), py::arg("b"),
          "Frobenius distance between the orthogonal projectors onto the row spans of a and b.");
}
