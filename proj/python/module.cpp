#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ihxlab/config.hpp"
#include "ihxlab/enumerate.hpp"
#include "ihxlab/errors.hpp"
#include "ihxlab/relations.hpp"
#include "ihxlab/symplectic.hpp"
#include "ihxlab/verify.hpp"

namespace py = pybind11;
using namespace ihxlab;

namespace {

GraphPolynomial polynomial_from_text(const std::string& text) {
    if (text.rfind("poly1", 0) == 0) return GraphPolynomial::parse(text);
    return GraphPolynomial::of(TrivalentGraph::parse_tg1(text));
}

py::int_ to_int(const Integer& z) { return py::int_(py::str(z.get_str())); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "trivalent graph algebras and symplectic invariant tensors";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<TypeMismatchError>(m, "TypeMismatchError", PyExc_TypeError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    m.def("set_limits", [](std::uint64_t term_cap, std::uint64_t class_cap) {
        if (term_cap == 0 || class_cap == 0) throw PreconditionError("caps must be positive");
        limits().term_cap = term_cap;
        limits().class_cap = class_cap;
    }, py::arg("term_cap"), py::arg("class_cap"));

    m.def("enumerate", [](std::uint32_t degree, bool connected, bool allow_loops, bool oriented) {
        std::vector<std::string> out;
        for (const auto& c : enumerate(degree, {.connected_only = connected, .allow_loops = allow_loops, .oriented = oriented})) {
            out.push_back(c.representative.to_tg1());
        }
        return out;
    }, py::arg("degree"), py::arg("connected") = false, py::arg("allow_loops") = true, py::arg("oriented") = false,
       "TG1 text of one representative per isomorphism class.");

    m.def("canonicalize", [](const std::string& tg1) {
        auto c = canonicalize(TrivalentGraph::parse_tg1(tg1));
        return py::make_tuple(c.encoding, c.sign);
    }, py::arg("tg1"));

    m.def("quotient_rank", [](std::uint32_t degree, const std::string& relations, bool connected) {
        auto r = quotient_rank(degree, parse_relation_specs(relations), connected);
        py::dict d;
        d["degree"] = r.degree;
        d["relations"] = r.specs;
        d["connected_only"] = r.connected_only;
        d["classes"] = r.classes;
        d["relation_vectors"] = r.relations;
        d["rank"] = r.rank;
        d["rank_second_order"] = r.rank_second_order;
        d["rank_mod_p"] = r.rank_mod_p;
        d["quotient_dimension"] = r.quotient_dimension;
        return d;
    }, py::arg("degree"), py::arg("relations"), py::arg("connected") = false);

    m.def("reduce", [](const std::string& text) {
        py::dict d;
        for (const auto& [mono, c] : reduce_to_E_normal_form(polynomial_from_text(text))) {
            d[py::str(format_monomial(mono))] = format_rational(c);
        }
        return d;
    }, py::arg("text"), "E-monomial normal form modulo ih0 and loop, coefficients as strings.");

    m.def("alpha", [](const std::string& text, std::uint32_t genus, const std::string& target) {
        auto p = polynomial_from_text(text);
        if (p.empty()) throw PreconditionError("empty polynomial");
        return alpha(p, p.terms().begin()->first.degree, genus, parse_target(target)).to_text();
    }, py::arg("text"), py::arg("genus"), py::arg("target") = "exterior", "Tensor text of alpha.");

    m.def("invariant_dimension", [](std::uint32_t genus, const std::string& space) {
        return invariant_dimension(genus, Space::parse(space));
    }, py::arg("genus"), py::arg("space"));

    m.def("space_dimension", [](std::uint32_t genus, const std::string& space) {
        return to_int(space_dimension(genus, Space::parse(space)));
    }, py::arg("genus"), py::arg("space"));

    m.def("weyl_dimension", [](std::uint32_t genus, const std::vector<std::uint32_t>& partition) {
        std::string s;
        for (auto p : partition) s += (s.empty() ? "" : ",") + std::to_string(p);
        return to_int(weyl_dimension(genus, parse_partition(s)));
    }, py::arg("genus"), py::arg("partition"));

    m.def("decomposition", [](std::uint32_t genus, const std::string& equation) {
        auto r = verify_decomposition(genus, equation);
        py::list summands;
        for (const auto& [p, d] : r.summands) summands.append(py::make_tuple(format_partition(p), to_int(d)));
        py::dict d;
        d["summands"] = summands;
        d["total"] = to_int(r.total);
        d["ambient"] = to_int(r.ambient);
        d["holds"] = r.holds();
        return d;
    }, py::arg("genus"), py::arg("equation"));

    m.def("verify", [](const std::string& suite) {
        auto r = run_suite(suite);
        return py::make_tuple(r.passed(), r.to_text());
    }, py::arg("suite"));
}
