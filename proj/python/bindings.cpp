#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gammaring/cli.hpp"
#include "gammaring/errors.hpp"
#include "gammaring/gamma_ring.hpp"
#include "gammaring/instance_file.hpp"
#include "gammaring/instances.hpp"
#include "gammaring/maps.hpp"
#include "gammaring/report_json.hpp"
#include "gammaring/structure.hpp"
#include "gammaring/theorems.hpp"

namespace py = pybind11;
using namespace gammaring;

namespace {

using Coords = std::vector<Coord>;

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object report_dict(const VerdictReport& r) { return to_python(report_body(r)); }

GroupElement element(const FinAbGroup& g, const Coords& c) {
    GroupElement x{c};
    g.require(x, "element");
    return x;
}

AdditiveMap map_from(const GammaRing& ring, const std::vector<Coords>& images) {
    std::vector<GroupElement> v;
    for (const auto& c : images) v.push_back(GroupElement{c});
    return make_additive_map(ring.m(), ring.m(), std::move(v));
}

std::vector<Coords> images_of(const AdditiveMap& f) {
    std::vector<Coords> out;
    for (const auto& y : f.images()) out.push_back(y.coords);
    return out;
}

MapRole role_of(const std::string& text) {
    const auto r = parse_map_role(text);
    if (!r) throw py::value_error("unknown role '" + text + "'");
    return *r;
}

Caps caps_with(std::optional<std::uint64_t> nodes) {
    Caps c;
    if (nodes) c.nodes = *nodes;
    return c;
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Finite Γ-ring workbench";

    auto base = py::register_exception<GammaError>(mod, "GammaError", PyExc_ValueError);
    py::register_exception<CapExceeded>(mod, "CapExceeded", base.ptr());
    py::register_exception<ParseError>(mod, "ParseError", base.ptr());

    py::class_<GammaRing>(mod, "GammaRing")
        .def_property_readonly("name", &GammaRing::name)
        .def_property_readonly("m_moduli", [](const GammaRing& r) { return Coords(r.m().moduli().begin(), r.m().moduli().end()); })
        .def_property_readonly("gamma_moduli",
                               [](const GammaRing& r) { return Coords(r.gamma().moduli().begin(), r.gamma().moduli().end()); })
        .def_property_readonly("m_order", [](const GammaRing& r) { return r.m().order(); })
        .def_property_readonly("gamma_order", [](const GammaRing& r) { return r.gamma().order(); })
        .def("entry", [](const GammaRing& r, std::size_t i, std::size_t j, std::size_t k) { return r.entry(i, j, k).coords; })
        .def("product",
             [](const GammaRing& r, const Coords& a, const Coords& g, const Coords& b) {
                 return product(r, element(r.m(), a), element(r.gamma(), g), element(r.m(), b)).coords;
             })
        .def("commutator",
             [](const GammaRing& r, const Coords& a, const Coords& b, const Coords& g) {
                 return commutator(r, element(r.m(), a), element(r.m(), b), element(r.gamma(), g)).coords;
             })
        .def("to_text", &emit_instance_file)
        .def("hash", &instance_hash)
        .def("__eq__", [](const GammaRing& a, const GammaRing& b) { return a == b; })
        .def("__repr__", [](const GammaRing& r) { return "<GammaRing " + r.name() + ">"; });

    mod.def("parse_instance", &parse_instance_file, py::arg("text"), py::arg("skip_assoc") = false);
    mod.def("builtin_instances", &builtin_instances);
    mod.def("random_instance", [](std::uint64_t seed) { return random_instance(seed); }, py::arg("seed"));
    mod.def("frobenius_example", [] {
        auto ex = frobenius_example();
        return py::make_tuple(ex.ring, images_of(ex.sigma));
    });
    mod.def(
        "instance",
        [](const std::string& recipe, const std::vector<std::string>& params) {
            std::vector<std::string> args{"instance", recipe};
            args.insert(args.end(), params.begin(), params.end());
            std::ostringstream out, err;
            if (run_command(args, out, err) != kExitOk) throw py::value_error(err.str());
            return parse_instance_file(out.str());
        },
        py::arg("recipe"), py::arg("params") = std::vector<std::string>{},
        "Build an instance by CLI recipe name (z2, dual, mat2-f4-frobenius, zq, rect, matrix, upper, random).");

    mod.def("center", [](const GammaRing& r) {
        std::vector<Coords> out;
        for (const auto& z : center(r).elements()) out.push_back(z.coords);
        return out;
    });
    mod.def(
        "analyze",
        [](const GammaRing& r, unsigned workers) {
            py::dict d;
            d["m_order"] = r.m().order();
            d["gamma_order"] = r.gamma().order();
            d["center_order"] = center(r).order();
            d["commutative"] = is_commutative(r).verdict;
            d["prime"] = is_prime(r, {}, workers).verdict;
            d["semiprime"] = is_semiprime(r).verdict;
            return d;
        },
        py::arg("ring"), py::arg("workers") = 1);

    mod.def(
        "enumerate_maps",
        [](const GammaRing& r, const std::string& role, bool scp, unsigned workers, std::optional<std::uint64_t> nodes) {
            MapSearchOptions opt;
            opt.caps = caps_with(nodes);
            opt.workers = workers;
            opt.require_scp = scp;
            std::vector<std::vector<Coords>> out;
            for (const auto& f : enumerate_maps(r, role_of(role), opt).maps) out.push_back(images_of(f));
            return out;
        },
        py::arg("ring"), py::arg("role"), py::arg("scp") = false, py::arg("workers") = 1, py::arg("node_cap") = py::none());
    mod.def(
        "classify_map",
        [](const GammaRing& r, const std::vector<Coords>& images) {
            const auto f = map_from(r, images);
            const auto v = classify_map(r, f);
            py::dict d;
            for (MapRole role : kAllRoles) d[py::str(std::string(to_string(role)))] = v[role].verdict;
            d["scp"] = is_scp(r, f).verdict;
            d["center_valued"] = image_in_center(r, f).verdict;
            return d;
        },
        py::arg("ring"), py::arg("images"));

    mod.def("theorem_ids", [] {
        std::vector<std::string> out;
        for (TheoremId id : kAllTheorems) out.emplace_back(to_string(id));
        return out;
    });
    mod.def(
        "verify_theorem",
        [](const GammaRing& r, const std::string& theorem, std::uint64_t seed, unsigned workers, bool sampling,
           std::optional<int> n_max) {
            const auto id = parse_theorem_id(theorem);
            if (!id) throw py::value_error("unknown theorem '" + theorem + "'");
            VerifyOptions opt;
            opt.seed = seed;
            opt.workers = workers;
            opt.allow_sampling = sampling;
            if (n_max) opt.permutation_n_max = *n_max;
            return report_dict(verify_theorem(r, *id, opt));
        },
        py::arg("ring"), py::arg("theorem"), py::arg("seed") = 0, py::arg("workers") = 1, py::arg("sampling") = true,
        py::arg("n_max") = py::none());
    mod.def(
        "search",
        [](const std::string& target, std::uint64_t seed, std::uint64_t count, std::uint64_t budget,
           std::vector<GammaRing> instances) {
            const auto t = parse_search_target(target);
            if (!t) throw py::value_error("unknown target '" + target + "'");
            SearchConfig cfg;
            cfg.target = *t;
            cfg.instances = std::move(instances);
            if (count > 0) cfg.random = RandomSource{.seed = seed, .count = count, .space = {}};
            cfg.node_budget = budget;
            return report_dict(search_counterexample(cfg));
        },
        py::arg("target"), py::arg("seed") = 0, py::arg("count") = 100, py::arg("budget") = 1'000'000,
        py::arg("instances") = std::vector<GammaRing>{});

    mod.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a gammactl command line; returns (exit_code, stdout, stderr).");
}
