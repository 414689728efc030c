#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unsharp/deduction.hpp"
#include "unsharp/generators.hpp"
#include "unsharp/laws.hpp"
#include "unsharp/render.hpp"
#include "unsharp/structure_file.hpp"

namespace py = pybind11;
using namespace unsharp;

namespace {

// Python sees elements by name only.
using Names = std::vector<std::string>;

Names names_of(const MeetSemilattice& s, const ElemSet& e) {
    Names out;
    for (Index x : e)
        out.push_back(s.name(x));
    return out;
}

ElemSet set_of(const MeetSemilattice& s, const Names& names) {
    return elem_set(s, std::span<const std::string>(names));
}

py::dict report_dict(const LawReport& r) {
    py::dict d;
    d["law"] = r.law;
    d["structure"] = r.structure;
    d["status"] = std::string(to_string(r.status));
    d["holds"] = r.holds();
    d["instances"] = r.instances;
    d["detail"] = r.detail;
    if (r.counterexample) {
        py::dict binding;
        for (const auto& [var, elem] : r.counterexample->binding)
            binding[py::str(var)] = elem;
        d["counterexample"] = py::dict(py::arg("binding") = binding, py::arg("lhs") = r.counterexample->lhs,
                                       py::arg("rhs") = r.counterexample->rhs);
    } else {
        d["counterexample"] = py::none();
    }
    return d;
}

OperatorKind kind_of(const std::string& kind) {
    if (kind == "neg")
        return OperatorKind::Negation;
    if (kind == "imp")
        return OperatorKind::Implication;
    throw Error(ErrorCode::InvalidArgument, "kind must be 'neg' or 'imp'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Unsharp negation and implication on finite meet-semilattices";

    // leaked on purpose: outlives the interpreter's module teardown
    static py::handle error = py::exception<Error>(m, "UnsharpError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = error(e.what());
            inst.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<MeetSemilattice>(m, "MeetSemilattice")
        .def_property_readonly("names", &MeetSemilattice::names)
        .def_property_readonly("label", &MeetSemilattice::label)
        .def_property_readonly("bounded", &MeetSemilattice::bounded)
        .def_property_readonly("bottom", [](const MeetSemilattice& s) { return s.name(s.bottom()); })
        .def_property_readonly("top",
                               [](const MeetSemilattice& s) -> std::optional<std::string> {
                                   if (!s.top())
                                       return std::nullopt;
                                   return s.name(*s.top());
                               })
        .def_property_readonly("maximal", [](const MeetSemilattice& s) { return names_of(s, s.maximal()); })
        .def("__len__", &MeetSemilattice::size)
        .def("leq", [](const MeetSemilattice& s, const std::string& a,
                       const std::string& b) { return s.leq(s.index_of(a), s.index_of(b)); })
        .def("meet", [](const MeetSemilattice& s, const std::string& a, const std::string& b) {
            return s.name(s.meet(s.index_of(a), s.index_of(b)));
        })
        .def("covers",
             [](const MeetSemilattice& s) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (auto [lo, hi] : s.poset().cover_pairs())
                     out.emplace_back(s.name(lo), s.name(hi));
                 return out;
             })
        .def("__eq__", [](const MeetSemilattice& a, const MeetSemilattice& b) { return a == b; })
        .def("__repr__", [](const MeetSemilattice& s) {
            return "<MeetSemilattice " + s.label() + " (" + std::to_string(s.size()) + " elements)>";
        });

    m.def("build", [](const std::string& spec) { return build(spec); }, py::arg("spec"));
    m.def(
        "semilattice",
        [](Names names, std::vector<std::pair<std::string, std::string>> covers) {
            return build_semilattice(std::move(names), covers);
        },
        py::arg("names"), py::arg("covers"));
    m.def("parse_structure", [](const std::string& text) { return parse_structure(text); });
    m.def("render_structure", &render_structure);
    m.def("fixture_names", [] {
        Names out;
        for (auto f : fixture_names())
            out.emplace_back(f);
        return out;
    });
    m.def("enumerate_all", &enumerate_all, py::arg("n"));
    m.def("random_instance", &random_instance, py::arg("n"), py::arg("seed"));

    m.def("neg", [](const MeetSemilattice& s, const std::string& a) { return names_of(s, neg(s, s.index_of(a))); });
    m.def("imp", [](const MeetSemilattice& s, const std::string& a, const std::string& b) {
        return names_of(s, imp(s, s.index_of(a), s.index_of(b)));
    });
    m.def("neg_set", [](const MeetSemilattice& s, const Names& a) { return names_of(s, neg_set(s, set_of(s, a))); });
    m.def("imp_set", [](const MeetSemilattice& s, const Names& a, const Names& b) {
        return names_of(s, imp_set(s, set_of(s, a), set_of(s, b)));
    });
    m.def("set_meet", [](const MeetSemilattice& s, const Names& a, const Names& b) {
        return names_of(s, set_meet(s, set_of(s, a), set_of(s, b)));
    });
    m.def("max_elements", [](const MeetSemilattice& s, const Names& a) {
        return names_of(s, max_elements(s, set_of(s, a)));
    });
    m.def("is_sharp", [](const MeetSemilattice& s, const std::string& a) { return is_sharp(s, s.index_of(a)); });
    m.def(
        "table",
        [](const MeetSemilattice& s, const std::string& kind) {
            return render_table(make_table(s, kind_of(kind)));
        },
        py::arg("s"), py::arg("kind") = "imp");

    m.def("laws", [] {
        Names out;
        for (LawId id : all_laws())
            out.emplace_back(to_string(id));
        return out;
    });
    m.def("check_law", [](const MeetSemilattice& s, const std::string& law) {
        const auto id = parse_law_id(law);
        if (!id)
            throw Error(ErrorCode::InvalidArgument, "unknown law '" + law + "'");
        return report_dict(check_law(s, *id));
    });
    m.def("check_all", [](const MeetSemilattice& s) {
        py::list out;
        for (const auto& r : check_all(s))
            out.append(report_dict(r));
        return out;
    });
    m.def("check_equation", [](const MeetSemilattice& s, const std::string& eq) {
        return report_dict(check_equation(s, eq));
    });
    m.def(
        "verify_characterization",
        [](const MeetSemilattice& s, const std::string& kind, std::size_t trials, std::uint64_t seed) {
            return report_dict(kind_of(kind) == OperatorKind::Negation
                                   ? verify_neg_characterization(s, trials, seed)
                                   : verify_imp_characterization(s, trials, seed));
        },
        py::arg("s"), py::arg("kind"), py::arg("trials") = 100, py::arg("seed") = 0);

    m.def("is_filter", [](const MeetSemilattice& s, const Names& f) { return is_filter(s, set_of(s, f)); });
    m.def("is_deductive_system",
          [](const MeetSemilattice& s, const Names& d) { return is_deductive_system(s, set_of(s, d)); });
    m.def("filters", [](const MeetSemilattice& s) {
        std::vector<Names> out;
        for (const auto& f : enumerate_filters(s))
            out.push_back(names_of(s, f.members));
        return out;
    });
    m.def("deductive_systems", [](const MeetSemilattice& s) {
        std::vector<Names> out;
        for (const auto& d : enumerate_deductive_systems(s))
            out.push_back(names_of(s, d.members));
        return out;
    });
    m.def("theta_classes", [](const MeetSemilattice& s, const Names& a) {
        std::vector<Names> out;
        for (const auto& c : classes(theta(s, set_of(s, a))))
            out.push_back(names_of(s, c));
        return out;
    });
    m.def("check_th3", [](const MeetSemilattice& s) { return report_dict(check_th3(s)); });
    m.def("check_lemma1", [](const MeetSemilattice& s) { return report_dict(check_lemma1(s)); });
    m.def("check_proposition",
          [](const MeetSemilattice& s, const Names& f) { return report_dict(check_proposition(s, set_of(s, f))); });
}
