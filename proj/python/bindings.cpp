// Python bindings for the core operations: constructions, validation,
// invariants, gluing, bounds and small searches.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kw/bounds.hpp"
#include "kw/canonical.hpp"
#include "kw/collapse.hpp"
#include "kw/complex.hpp"
#include "kw/constructions.hpp"
#include "kw/glue.hpp"
#include "kw/homology.hpp"
#include "kw/io.hpp"
#include "kw/search.hpp"

namespace py = pybind11;
using namespace kw;

namespace {

Complex2 complex_from_lists(int vertices, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::tuple<int, int, int>>& triangles,
                            bool close_down) {
    std::vector<Edge> es;
    for (auto [a, b] : edges) es.emplace_back(a, b);
    std::vector<Triangle> ts;
    for (auto [a, b, c] : triangles) ts.emplace_back(a, b, c);
    return Complex2::make(vertices, std::move(es), std::move(ts), close_down);
}

std::vector<std::pair<int, int>> edge_list(const Complex2& K) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : K.edges()) out.emplace_back(e.v[0], e.v[1]);
    return out;
}

std::vector<std::tuple<int, int, int>> triangle_list(const Complex2& K) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& t : K.triangles()) out.emplace_back(t.v[0], t.v[1], t.v[2]);
    return out;
}

std::vector<std::string> torsion_strings(const std::vector<Int>& t) {
    std::vector<std::string> out;
    for (const auto& d : t) out.push_back(d.str());
    return out;
}

} // namespace

PYBIND11_MODULE(_kwtopo, m) {
    m.doc() = "simplicial 2-complex toolkit: constructions, invariants, gluing, bounds, search";

    py::class_<Complex2>(m, "Complex2")
        .def(py::init(&complex_from_lists), py::arg("vertices"), py::arg("edges"),
             py::arg("triangles"), py::arg("close_down") = false)
        .def_property_readonly("vertices", &Complex2::vertex_count)
        .def_property_readonly("edges", &edge_list)
        .def_property_readonly("triangles", &triangle_list)
        .def("euler_characteristic", &Complex2::euler_characteristic)
        .def("is_connected", &Complex2::is_connected)
        .def("to_json", [](const Complex2& K) { return complex_to_json(K); })
        .def_static("from_json", [](const std::string& s) { return complex_from_json(s); })
        .def("__eq__", [](const Complex2& a, const Complex2& b) { return a == b; })
        .def("__repr__", [](const Complex2& K) {
            std::ostringstream os;
            os << "Complex2(s0=" << K.vertex_count() << ", s1=" << K.edge_count()
               << ", s2=" << K.triangle_count() << ")";
            return os.str();
        });

    py::class_<MarkedComplex>(m, "MarkedComplex")
        .def_readonly("complex", &MarkedComplex::complex)
        .def_readonly("base_vertex", &MarkedComplex::base_vertex)
        .def_readonly("marked_paths", &MarkedComplex::marked_paths);

    m.def("validate", [](const Complex2& K) {
        ValidationReport r = validate(K);
        py::dict d;
        d["valid"] = r.valid();
        d["connected"] = r.connected;
        d["violations"] = r.violations;
        return d;
    });
    m.def("star", [](const Complex2& K, VertexId v) { return star(K, v); });
    m.def("link", [](const Complex2& K, VertexId v) { return link(K, v); });
    m.def("classify_surface", [](const Complex2& K) {
        SurfaceReport r = classify_surface(K);
        py::dict d;
        d["is_closed_surface"] = r.is_closed_surface;
        d["euler_characteristic"] = r.euler_characteristic;
        if (r.is_closed_surface) {
            d["orientable"] = r.orientable;
            d["genus"] = r.genus;
        }
        return d;
    });
    m.def("star_cover_nerve", &star_cover_nerve);
    m.def("canonical_key", [](const Complex2& K) { return canonical_form(K).key(); });
    m.def("isomorphic", &isomorphic);

    m.def("homology", [](const Complex2& K) {
        HomologyProfile h = homology(K);
        py::dict d;
        d["betti"] = std::vector<int>{h.b0, h.b1, h.b2};
        d["h1_torsion"] = torsion_strings(h.h1_torsion);
        return d;
    });
    m.def("is_collapsible_to_graph",
          [](const Complex2& K) { return is_collapsible_to_graph(K); });
    m.def("edge_path_presentation_info", [](const Complex2& K) {
        Presentation P = edge_path_presentation(K);
        Presentation S = tietze_simplify(P);
        AbelianGroup ab = abelianization(P);
        py::dict d;
        d["generators"] = P.generator_count;
        d["relators"] = P.relators.size();
        d["simplified_generators"] = S.generator_count;
        std::vector<std::string> rel;
        for (const auto& r : S.relators) rel.push_back(r.str());
        d["simplified_relators"] = rel;
        d["abelianization_rank"] = ab.free_rank;
        d["abelianization_torsion"] = torsion_strings(ab.invariant_factors);
        return d;
    });

    m.def("bouquet", &bouquet);
    m.def("minimal_torus", &minimal_torus);
    m.def("minimal_rp2", &minimal_rp2);
    m.def("moebius_band", &moebius_band);
    m.def("genus2_surface", &genus2_surface);
    m.def("telescope", &telescope);
    m.def("cyclic_complex", &cyclic_complex);
    m.def("raag_complex", [](int n, const std::vector<std::pair<int, int>>& commuting) {
        return raag_complex(CoxeterMatrix::right_angled(n, commuting));
    });
    m.def("racg_complex", [](int n, const std::vector<std::pair<int, int>>& commuting) {
        return racg_complex(CoxeterMatrix::right_angled(n, commuting));
    });
    m.def("one_relator_power_complex",
          [](int n, const std::string& w, const std::string& v, long long mm) {
              return one_relator_power_complex(n, parse_word(w), parse_word(v), mm);
          });
    m.def("artin_large_complex", [](int n, const std::vector<std::tuple<int, int, int>>& entries) {
        CoxeterMatrix M;
        M.n = n;
        for (auto [i, j, mij] : entries) M.set(i, j, mij);
        return artin_large_complex(M);
    });
    m.def("coxeter_large_complex",
          [](int n, const std::vector<std::tuple<int, int, int>>& entries) {
              CoxeterMatrix M;
              M.n = n;
              for (auto [i, j, mij] : entries) M.set(i, j, mij);
              return coxeter_large_complex(M);
          });

    m.def("glue", [](const Complex2& X, const Complex2& Y, const Complex2& Z,
                     const std::vector<VertexId>& into_x, const std::vector<VertexId>& into_y) {
        GlueResult r = glue(X, Y, Embedding{Z, into_x}, Embedding{Z, into_y});
        py::dict d;
        d["complex"] = r.complex;
        d["lemma22_condition1"] = r.lemma22_condition1;
        d["lemma22_condition2"] = r.lemma22_condition2;
        d["directly_validated"] = r.directly_validated;
        return d;
    });
    py::register_exception<GlueError>(m, "GlueError");

    m.def("kw_free", &kw_free);
    m.def("kw_surface", &kw_surface);
    m.def("chromatic_surface", &chromatic_surface);
    auto report_dict = [](const BoundReport& r) {
        py::dict d;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["lower_source"] = r.lower_source;
        d["upper_source"] = r.upper_source;
        if (r.lower_ceiling) d["lower_ceiling"] = *r.lower_ceiling;
        if (r.upper_improved) d["upper_improved"] = *r.upper_improved;
        return d;
    };
    m.def("cyclic_bounds", [=](long long mm) { return report_dict(cyclic_bounds(mm)); });
    m.def("free_abelian_bounds", [=](long long n) { return report_dict(free_abelian_bounds(n)); });
    m.def("z2_sum_bounds", [=](long long n) { return report_dict(z2_sum_bounds(n)); });
    m.def("raag_bounds", [=](long long n, long long mm) { return report_dict(raag_bounds(n, mm)); });
    m.def("racg_bounds", [=](long long n, long long mm) { return report_dict(racg_bounds(n, mm)); });
    m.def("finite_abelian_bounds", [=](const std::vector<long long>& f) {
        return report_dict(finite_abelian_bounds(f));
    });
    m.def("systolic_bounds", [=](long long kwv, bool zero_free_index) {
        return report_dict(systolic_bounds(kwv, zero_free_index));
    });
    m.def("entropy_upper", &entropy_upper);
    m.def("free_entropy", &free_entropy);
    m.def("group_count_log2", &group_count_log2);

    m.def(
        "enumerate_complexes",
        [](int max_vertices, bool pure2, bool closed_surface, std::optional<int> chi,
           std::optional<bool> orientable, int threads) {
            EnumerationConstraints c;
            c.max_vertices = max_vertices;
            c.require_pure2 = pure2;
            c.require_closed_surface = closed_surface;
            if (chi) c.euler_characteristic = *chi;
            if (orientable) c.orientable = *orientable;
            return enumerate_complexes(c, threads);
        },
        py::arg("max_vertices"), py::arg("pure2") = false, py::arg("closed_surface") = false,
        py::arg("chi") = std::nullopt, py::arg("orientable") = std::nullopt,
        py::arg("threads") = 1);
    m.def("certify_min_vertices", [](const std::string& property, int n_max, int threads) {
        CertResult r = certify_min_vertices(property, 1, n_max, threads);
        py::dict d;
        d["property"] = r.property;
        d["minimal_vertex_count"] = r.minimal_vertex_count;
        d["exhaustively_checked_below"] = r.exhaustively_checked_below;
        d["complexes_examined"] = r.complexes_examined;
        d["undecided"] = r.undecided.size();
        if (r.witness) d["witness"] = *r.witness;
        return d;
    });
    m.def("freeness_screen", [](const Complex2& K) {
        switch (freeness_screen(K)) {
            case Freeness::Free: return "free";
            case Freeness::NonFree: return "nonfree";
            default: return "undecided";
        }
    });
}
