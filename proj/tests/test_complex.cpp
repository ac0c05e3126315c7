#include <doctest.h>

#include <random>

#include "kw/canonical.hpp"
#include "kw/complex.hpp"
#include "kw/constructions.hpp"
#include "kw/io.hpp"

using namespace kw;

TEST_CASE("euler characteristic of the canonical complexes") {
    CHECK(minimal_torus().euler_characteristic() == 0);
    CHECK(minimal_rp2().euler_characteristic() == 1);
    CHECK(Complex2::single_vertex().euler_characteristic() == 1);
}

TEST_CASE("torus and rp2 counts") {
    Complex2 T = minimal_torus();
    CHECK(T.vertex_count() == 7);
    CHECK(T.edge_count() == 21);
    CHECK(T.triangle_count() == 14);
    Complex2 P = minimal_rp2();
    CHECK(P.vertex_count() == 6);
    CHECK(P.edge_count() == 15);
    CHECK(P.triangle_count() == 10);
    // complete 1-skeletons
    CHECK(T.edge_count() == 7 * 6 / 2);
    CHECK(P.edge_count() == 6 * 5 / 2);
}

TEST_CASE("validate flags closure violations and disconnection") {
    CHECK(validate(minimal_torus()).valid());
    CHECK(validate(minimal_torus()).connected);

    // a triangle with one edge missing
    Complex2 broken = Complex2::make(3, {Edge(0, 2), Edge(1, 2)}, {Triangle(0, 1, 2)});
    ValidationReport rep = validate(broken);
    CHECK_FALSE(rep.valid());
    CHECK(rep.violations.front().find("closure violation") != std::string::npos);
    CHECK(rep.violations.front().find("{0,1}") != std::string::npos);

    // two disjoint triangles: valid but disconnected
    Complex2 two = Complex2::from_triangles(6, {Triangle(0, 1, 2), Triangle(3, 4, 5)});
    CHECK(validate(two).valid());
    CHECK_FALSE(validate(two).connected);
}

TEST_CASE("stars and links") {
    Complex2 T = minimal_torus();
    for (VertexId v = 0; v < 7; ++v) {
        Complex2 lk = link(T, v);
        CHECK(is_single_cycle(lk));
        CHECK(lk.vertex_count() == 6);
    }
    // single triangle: the link of a corner is the opposite edge
    Complex2 tri = Complex2::from_triangles(3, {Triangle(0, 1, 2)});
    Complex2 lk = link(tri, 0);
    CHECK(lk.vertex_count() == 2);
    CHECK(lk.edge_count() == 1);
    CHECK(lk.triangles().empty());

    // bouquet base: 2n isolated vertices in the link
    MarkedComplex B = bouquet(3);
    Complex2 lb = link(B.complex, B.base_vertex);
    CHECK(lb.vertex_count() == 6);
    CHECK(lb.edge_count() == 0);

    CHECK_THROWS_AS(link(T, 99), std::invalid_argument);
}

TEST_CASE("surface classification") {
    SurfaceReport t = classify_surface(minimal_torus());
    CHECK(t.is_closed_surface);
    CHECK(t.orientable);
    CHECK(t.genus == 1);

    SurfaceReport p = classify_surface(minimal_rp2());
    CHECK(p.is_closed_surface);
    CHECK_FALSE(p.orientable);
    CHECK(p.genus == 1);
    CHECK(p.euler_characteristic == 1);

    CHECK_FALSE(classify_surface(moebius_band().complex).is_closed_surface);
}

TEST_CASE("canonical form is a complete invariant on relabelings") {
    std::mt19937 rng(20240817);
    Complex2 T = minimal_torus();
    CanonicalComplex ct = canonical_form(T);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<VertexId> perm(7);
        for (int i = 0; i < 7; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(T, perm)) == ct);
    }
    CHECK_FALSE(canonical_form(minimal_rp2()) == ct);
}

namespace {

// Independent oracle: isomorphism by brute force over all vertex bijections.
bool brute_isomorphic(const Complex2& X, const Complex2& Y) {
    if (X.vertex_count() != Y.vertex_count()) return false;
    std::vector<VertexId> perm(X.vertex_count());
    for (int i = 0; i < X.vertex_count(); ++i) perm[i] = i;
    do {
        if (relabel(X, perm) == Y) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("canonical form separates same-f-vector complexes") {
    // Path and claw on 4 vertices: equal f-vectors (4,3,0), not isomorphic.
    Complex2 path = Complex2::make(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)}, {});
    Complex2 claw = Complex2::make(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}, {});
    REQUIRE_FALSE(brute_isomorphic(path, claw));
    CHECK_FALSE(canonical_form(path) == canonical_form(claw));

    // A pair that is isomorphic but differently labeled maps to one form.
    Complex2 A = Complex2::make(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3)},
                                {Triangle(0, 1, 2)});
    Complex2 B = Complex2::make(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(1, 3)},
                                {Triangle(0, 1, 2)});
    REQUIRE(brute_isomorphic(A, B));
    CHECK(canonical_form(A) == canonical_form(B));
}

TEST_CASE("star cover nerve reproduces the complex") {
    for (const Complex2& K : {minimal_torus(), minimal_rp2(), bouquet(2).complex}) {
        Complex2 N = star_cover_nerve(K);
        CHECK(isomorphic(N, K));
    }
    Complex2 tri = Complex2::from_triangles(3, {Triangle(0, 1, 2)});
    CHECK(star_cover_nerve(tri) == tri);
}

TEST_CASE("nerve idempotence on random small complexes") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng() % 5);
        std::vector<Triangle> tris;
        int want = 1 + int(rng() % 6);
        for (int i = 0; i < want; ++i) {
            VertexId a = rng() % n, b = rng() % n, c = rng() % n;
            if (a == b || b == c || a == c) continue;
            tris.emplace_back(a, b, c);
        }
        std::vector<Edge> extra;
        for (int i = 0; i < 3; ++i) {
            VertexId a = rng() % n, b = rng() % n;
            if (a != b) extra.emplace_back(a, b);
        }
        Complex2 K = Complex2::make(n, extra, tris, true);
        CHECK(isomorphic(star_cover_nerve(K), K));
    }
}

TEST_CASE("json round trip is bit-identical") {
    for (const Complex2& K : {minimal_torus(), minimal_rp2(), genus2_surface()}) {
        std::string a = complex_to_json(K);
        Complex2 L = complex_from_json(a);
        CHECK(L == K);
        CHECK(complex_to_json(L) == a);
    }
    CHECK_THROWS(complex_from_json("{\"vertices\":2,\"edges\":[[0,0]]}"));
    CHECK_THROWS(complex_from_json("{\"vertices\":3,\"triangles\":[[0,1,2]]}")); // closure
}
