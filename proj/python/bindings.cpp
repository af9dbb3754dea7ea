#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unicover/algebra.hpp"
#include "unicover/deform.hpp"
#include "unicover/errors.hpp"
#include "unicover/files.hpp"
#include "unicover/polytext.hpp"
#include "unicover/resolve.hpp"
#include "unicover/tower.hpp"

namespace py = pybind11;
using namespace unicover;

namespace {

using Report = std::vector<std::tuple<std::string, bool, std::string>>;

Report to_list(const ValidationReport& report) {
    Report out;
    for (const auto& e : report.entries) out.emplace_back(e.rule, e.pass, e.message);
    return out;
}

std::string forward(const std::string& tower_text, const std::vector<int>& exponents, bool with_adic) {
    const CoveringTower tower = parse_tower(tower_text);
    const FamilyEquation family = eliminate(build_family(tower, exponents));
    if (!with_adic) return render_family(family);
    const SigmaAdic adic = sigma_adic(family);
    return render_family(family, &adic);
}

py::dict summary(const ResolutionTower& res) {
    py::list steps;
    for (const auto& s : res.steps) steps.append(py::make_tuple(render_poly(s.D), s.r));
    py::list system;
    for (const auto& f : res.final_system) system.append(render_poly(f));
    py::dict out;
    out["depth"] = res.depth();
    out["m"] = res.m;
    out["sigma"] = render_poly(res.sigma);
    out["fibers"] = res.fibers;
    out["steps"] = steps;
    out["final_system"] = system;
    out["reeliminated"] = render_poly(reeliminate(res));
    out["text"] = render_resolution(res);
    return out;
}

std::vector<BranchGerm> germs(const std::vector<std::vector<std::string>>& branches) {
    std::vector<BranchGerm> out;
    for (const auto& b : branches) {
        BranchGerm g;
        for (const auto& c : b) {
            Rational q;
            if (q.set_str(c, 10) != 0) throw InvalidArgument("not a rational number: `" + c + "`");
            q.canonicalize();
            g.coeffs.push_back(q);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact covering towers, their deformations and resolutions";

    static PyObject* const error = PyErr_NewException("unicover._core.UnicoverError", PyExc_RuntimeError, nullptr);
    m.add_object("UnicoverError", py::handle(error));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error)(e.kind() + ": " + e.what());
            inst.attr("kind") = e.kind();
            PyErr_SetObject(error, inst.ptr());
        }
    });

    m.def(
        "normalize",
        [](const std::string& text, const std::vector<std::string>& variables) {
            return render_poly(parse_poly(text, VarTable::make(variables)));
        },
        py::arg("text"), py::arg("variables"));
    m.def(
        "gcd",
        [](const std::string& f, const std::string& g, const std::vector<std::string>& variables) {
            const auto vars = VarTable::make(variables);
            return render_poly(gcd(parse_poly(f, vars), parse_poly(g, vars)));
        },
        py::arg("f"), py::arg("g"), py::arg("variables"));
    m.def(
        "verify", [](const std::string& text) { return to_list(validate_normal_type(parse_tower(text))); },
        py::arg("tower_text"));
    m.def("forward", &forward, py::arg("tower_text"), py::arg("exponents") = std::vector<int>{},
          py::arg("sigma_adic") = false);
    m.def(
        "resolve",
        [](const std::string& text, int max_depth) { return summary(resolve_family(parse_family(text), max_depth)); },
        py::arg("family_text"), py::arg("max_depth") = kDefaultMaxDepth);
    m.def(
        "curve",
        [](const std::vector<std::vector<std::string>>& branches, int max_depth) {
            return summary(curve_resolve(germs(branches), max_depth));
        },
        py::arg("branches"), py::arg("max_depth") = kDefaultMaxDepth);
}
