#include "kw/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "kw/glue.hpp"

namespace kw {

CoxeterMatrix CoxeterMatrix::right_angled(int n, const std::vector<std::pair<int, int>>& commuting) {
    CoxeterMatrix M;
    M.n = n;
    for (auto [i, j] : commuting) M.set(i, j, 2);
    return M;
}

void CoxeterMatrix::set(int i, int j, int m) {
    if (i == j) throw std::invalid_argument("diagonal entries are fixed");
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("index out of range");
    if (m < 2) throw std::invalid_argument("off-diagonal entries must be >= 2");
    finite[{std::min(i, j), std::max(i, j)}] = m;
}

bool CoxeterMatrix::all_entries_are(int m) const {
    for (const auto& [ij, v] : finite)
        if (v != m) return false;
    return true;
}

bool CoxeterMatrix::all_entries_at_least(int m) const {
    for (const auto& [ij, v] : finite)
        if (v < m) return false;
    return true;
}

const std::vector<VertexId>& MarkedComplex::path(const std::string& name) const {
    auto it = marked_paths.find(name);
    if (it == marked_paths.end()) throw std::invalid_argument("unknown marked path: " + name);
    return it->second;
}

MarkedComplex bouquet(int n) {
    if (n < 1) throw std::invalid_argument("bouquet needs at least one circle");
    std::vector<Edge> edges;
    MarkedComplex mc;
    for (int i = 0; i < n; ++i) {
        VertexId a = 1 + 2 * i, b = 2 + 2 * i;
        edges.emplace_back(0, a);
        edges.emplace_back(a, b);
        edges.emplace_back(0, b);
        mc.marked_paths["a" + std::to_string(i + 1)] = {0, a, b};
    }
    mc.complex = Complex2::make(2 * n + 1, std::move(edges), {});
    mc.base_vertex = 0;
    return mc;
}

Complex2 minimal_torus() {
    std::vector<Triangle> tris;
    for (int i = 0; i < 7; ++i) {
        tris.emplace_back(i, (i + 1) % 7, (i + 3) % 7);
        tris.emplace_back(i, (i + 2) % 7, (i + 3) % 7);
    }
    return Complex2::from_triangles(7, std::move(tris));
}

namespace {

// Faces of the icosahedral triangulation of the projective plane.  In the
// labels used throughout: the base vertex is 0, the generator circle is
// 0-2-1, the band core 0-3-4, the band boundary 0-2-5 (the face removed to
// open the Moebius band).
constexpr int kRp2Faces[10][3] = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                                  {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};

} // namespace

Complex2 minimal_rp2() {
    std::vector<Triangle> tris;
    for (const auto& f : kRp2Faces) tris.emplace_back(f[0], f[1], f[2]);
    return Complex2::from_triangles(6, std::move(tris));
}

Complex2 remove_triangle(const Complex2& K, const Triangle& t) {
    std::vector<Triangle> tris;
    bool found = false;
    for (const auto& s : K.triangles()) {
        if (s == t) {
            found = true;
            continue;
        }
        tris.push_back(s);
    }
    if (!found) throw std::invalid_argument("triangle to remove is not present");
    return Complex2::make(K.vertex_count(), K.edges(), std::move(tris));
}

MarkedComplex moebius_band() {
    MarkedComplex mc;
    mc.complex = remove_triangle(minimal_rp2(), Triangle(0, 2, 5));
    mc.base_vertex = 0;
    mc.marked_paths["core"] = {0, 3, 4};
    mc.marked_paths["boundary"] = {0, 2, 5};
    mc.marked_paths["circle"] = {0, 2, 1};
    return mc;
}

MarkedComplex punctured_torus() {
    Complex2 T = minimal_torus();
    Complex2 cut = remove_triangle(remove_triangle(T, Triangle(1, 2, 4)), Triangle(2, 4, 5));
    // The shared edge of the removed pair goes too; the hole is the
    // quadrilateral 1-2-5-4.
    std::vector<Edge> edges;
    for (const auto& e : cut.edges())
        if (!(e == Edge(2, 4))) edges.push_back(e);
    MarkedComplex mc;
    mc.complex = Complex2::make(7, std::move(edges), cut.triangles());
    mc.base_vertex = 1;
    mc.marked_paths["boundary"] = {1, 2, 5, 4};
    return mc;
}

Complex2 genus2_surface() {
    MarkedComplex P = punctured_torus();
    Complex2 Z = Complex2::make(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)}, {});
    Embedding iZ{Z, {1, 2, 5, 4}};
    // Shifted identification x_i -> y_{i+1}; the aligned one would create a
    // duplicate edge (the complete 1-skeleton already joins opposite hole
    // corners on each side).
    Embedding jZ{Z, {2, 5, 4, 1}};
    return glue(P.complex, P.complex, iZ, jZ).complex;
}

namespace {

// Circles of the minimal torus meeting only at vertex 0 whose classes span
// H1: 0-1-2 and 0-3-6 in the mod-7 labeling.
const std::vector<VertexId> kTorusCircleA = {0, 1, 2};
const std::vector<VertexId> kTorusCircleB = {0, 3, 6};

Complex2 wedge_of_two_circles() {
    return Complex2::make(
        5, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3), Edge(3, 4), Edge(0, 4)}, {});
}

// Glue a minimal torus onto two marked circles (each based at the wedge
// point), per the commuting-pair cell of the right-angled constructions.
void glue_torus_cell(MarkedComplex& mc, const std::vector<VertexId>& ci,
                     const std::vector<VertexId>& cj) {
    Complex2 Z = wedge_of_two_circles();
    Embedding iZ{Z, {ci[0], ci[1], ci[2], cj[1], cj[2]}};
    Embedding jZ{Z, {kTorusCircleA[0], kTorusCircleA[1], kTorusCircleA[2], kTorusCircleB[1],
                     kTorusCircleB[2]}};
    GlueResult r = glue(mc.complex, minimal_torus(), iZ, jZ);
    mc.complex = std::move(r.complex);
    // x ids are unchanged by glue, marked paths stay valid.
}

} // namespace

MarkedComplex raag_complex(const CoxeterMatrix& M) {
    if (!M.all_entries_are(2))
        throw std::invalid_argument("right-angled Artin matrix needs all finite entries equal 2");
    MarkedComplex mc = bouquet(M.n);
    for (const auto& [ij, m] : M.finite) {
        auto [i, j] = ij;
        glue_torus_cell(mc, mc.path("a" + std::to_string(i + 1)),
                        mc.path("a" + std::to_string(j + 1)));
    }
    return mc;
}

MarkedComplex racg_complex(const CoxeterMatrix& M) {
    if (!M.all_entries_are(2))
        throw std::invalid_argument("right-angled Coxeter matrix needs all finite entries equal 2");
    if (M.n < 1) throw std::invalid_argument("need at least one generator");

    // Wedge of projective planes at the base vertex; the generator circle
    // of plane i is the in-plane path p1-p4-p5.
    MarkedComplex mc;
    mc.complex = Complex2::single_vertex();
    mc.base_vertex = 0;
    Complex2 point = Complex2::single_vertex();
    for (int i = 0; i < M.n; ++i) {
        Embedding iZ{point, {0}};
        Embedding jZ{point, {0}};
        GlueResult r = glue(mc.complex, minimal_rp2(), iZ, jZ);
        mc.marked_paths["a" + std::to_string(i + 1)] = {0, r.y_map[2], r.y_map[1]};
        mc.complex = std::move(r.complex);
    }
    for (const auto& [ij, m] : M.finite) {
        auto [i, j] = ij;
        glue_torus_cell(mc, mc.path("a" + std::to_string(i + 1)),
                        mc.path("a" + std::to_string(j + 1)));
    }
    return mc;
}

Word alternating_product(int i, int j, int m) {
    Word w;
    for (int t = 0; t < m; ++t) w.letters.push_back({t % 2 == 0 ? i : j, 1});
    return w;
}

Presentation one_relator_presentation(int n, const Word& w, const Word& v, long long m) {
    Presentation P;
    P.generator_count = n;
    P.relators.push_back(w.power(static_cast<int>(m)).concat(v.power(static_cast<int>(-m))).freely_reduced());
    return P;
}

Presentation multi_relator_presentation(int n, const std::vector<PowerRelation>& relations) {
    Presentation P;
    P.generator_count = n;
    for (const auto& r : relations)
        P.relators.push_back(
            r.w.power(static_cast<int>(r.m)).concat(r.v.power(static_cast<int>(-r.m))).freely_reduced());
    return P;
}

Presentation artin_presentation(const CoxeterMatrix& M) {
    Presentation P;
    P.generator_count = M.n;
    for (const auto& [ij, m] : M.finite) {
        auto [i, j] = ij;
        P.relators.push_back(
            alternating_product(i, j, m).concat(alternating_product(j, i, m).inverse()).freely_reduced());
    }
    return P;
}

Presentation coxeter_presentation(const CoxeterMatrix& M) {
    Presentation P = artin_presentation(M);
    for (int i = 0; i < M.n; ++i) {
        Word sq;
        sq.letters = {{i, 1}, {i, 1}};
        P.relators.push_back(sq);
    }
    return P;
}

} // namespace kw
