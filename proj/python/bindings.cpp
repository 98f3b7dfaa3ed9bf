#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxcurves/reports.hpp"

namespace py = pybind11;
using namespace maxcurves;

namespace {

CurveId named_curve(const std::string& name) {
    std::optional<CurveId> id = curve_from_name(name);
    if (!id) throw Error(Errc::BadParameter, "unknown curve name: " + name);
    return *id;
}

Json command_report(const std::string& command, const CurveParams& params,
                    std::uint64_t precision, std::uint64_t budget) {
    if (command == "count") return count_report(params);
    if (command == "group") return group_report(params, budget);
    if (command == "orbits") return orbit_report(params, budget, budget);
    if (command == "ramification") return ramification_report(params);
    if (command == "expand") return expand_report(params, precision);
    if (command == "verify-all") {
        return verify_report(params, run_verification(params, budget, budget, precision));
    }
    throw Error(Errc::BadParameter, "unknown command: " + command);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "maximal-curve invariants: point counts, automorphisms, ramification";

    py::register_exception<Error>(m, "CurveError");

    m.def(
        "count_points",
        [](const std::string& curve, std::uint64_t p, std::uint32_t h, std::uint32_t n) {
            return count_points(named_curve(curve), make_params(p, h, n));
        },
        py::arg("curve"), py::arg("p"), py::arg("h") = 1, py::arg("n") = 3);

    m.def(
        "genus",
        [](const std::string& curve, std::uint64_t p, std::uint32_t h, std::uint32_t n) {
            return genus(named_curve(curve), make_params(p, h, n));
        },
        py::arg("curve"), py::arg("p"), py::arg("h") = 1, py::arg("n") = 3);

    m.def(
        "is_maximal",
        [](const std::string& curve, std::uint64_t p, std::uint32_t h, std::uint32_t n) {
            return check_maximal(named_curve(curve), make_params(p, h, n));
        },
        py::arg("curve"), py::arg("p"), py::arg("h") = 1, py::arg("n") = 3);

    m.def(
        "group_order",
        [](std::uint64_t p, std::uint32_t h, std::uint32_t n) {
            GammaGroup G(make_params(p, h, n));
            return G.subgroup_order(SubgroupId::Gamma);
        },
        py::arg("p"), py::arg("h") = 1, py::arg("n") = 3);

    m.def(
        "orbit_sizes",
        [](std::uint64_t p, std::uint32_t h, std::uint32_t n) {
            GammaGroup G(make_params(p, h, n));
            return G.orbits(SubgroupId::Gamma).sizes();
        },
        py::arg("p"), py::arg("h") = 1, py::arg("n") = 3);

    m.def(
        "lifting_residual",
        [](std::uint64_t p, std::uint32_t h, std::uint32_t n) {
            LiftingObstruction lift = lifting_obstruction(p, h, n);
            return py::make_tuple(lift.residual, lift.lifts_possible);
        },
        py::arg("p"), py::arg("h") = 1, py::arg("n") = 3);

    m.def(
        "report_json",
        [](const std::string& command, std::uint64_t p, std::uint32_t h, std::uint32_t n,
           std::uint64_t precision, std::uint64_t budget) {
            return command_report(command, make_params(p, h, n), precision, budget).dump();
        },
        py::arg("command"), py::arg("p"), py::arg("h") = 1, py::arg("n") = 3,
        py::arg("precision") = 0, py::arg("budget") = 10'000'000);
}
