#include "zpoly/cli.hpp"
#include "zpoly/homogeneous.hpp"
#include "zpoly/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zpoly;

namespace {

RunOptions options(const std::string& mode, long box_radius, const std::string& omega, bool oracle) {
    RunOptions o;
    if (mode != "") o.mode = mode == "cubic" ? SolveMode::Cubic : mode == "homogeneous" ? SolveMode::Homogeneous : SolveMode::Auto;
    if (box_radius > 0) o.box_radius = Int(box_radius);
    if (!omega.empty()) o.omega = parse_rat(omega);
    o.oracle = oracle;
    return o;
}

}  // namespace

PYBIND11_MODULE(_zpoly, m) {
    static py::exception<Error> zerr(m, "ZpolyError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(zerr, e.what());
        }
    });

    m.def(
        "run",
        [](const std::string& problem, const std::string& mode, long box_radius, bool oracle) {
            return run_problem(parse_problem(problem), options(mode, box_radius, "", oracle));
        },
        py::arg("problem"), py::arg("mode") = "", py::arg("box_radius") = 0, py::arg("oracle") = false,
        "Solve a JSON problem; returns the JSON result string.");
    m.def(
        "regions",
        [](const std::string& problem, const std::string& mode, long box_radius, const std::string& omega) {
            return emit_regions(parse_problem(problem), options(mode, box_radius, omega, false));
        },
        py::arg("problem"), py::arg("mode") = "", py::arg("box_radius") = 0, py::arg("omega") = "");
    m.def(
        "oracle",
        [](uint64_t seed, long count, long box_radius) {
            std::vector<InstanceSpec> specs;
            for (long k = 0; k < count; ++k) {
                InstanceSpec s;
                s.seed = seed + static_cast<uint64_t>(k);
                s.box_radius = box_radius;
                specs.push_back(s);
            }
            return differential_run(specs).to_text();
        },
        py::arg("seed"), py::arg("count"), py::arg("box_radius") = 6);
    m.def("is_translatable", [](const std::string& problem) { return detect_translatable(parse_problem(problem).f).has_value(); });

    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<uint64_t>())
        .def("next", &SplitMix64::next);
}
