#include <doctest.h>

#include <random>

#include "kw/collapse.hpp"
#include "kw/constructions.hpp"
#include "kw/homology.hpp"

using namespace kw;

namespace {

Word W(const std::string& s) { return parse_word(s); }

Presentation pres(int n, std::initializer_list<std::string> relators) {
    Presentation P;
    P.generator_count = n;
    for (const auto& r : relators) P.relators.push_back(W(r));
    return P;
}

} // namespace

TEST_CASE("abelianization of standard presentations") {
    // <a | a^m>
    for (int m : {2, 3, 8}) {
        Presentation P;
        P.generator_count = 1;
        P.relators.push_back(W("a1").power(m));
        AbelianGroup g = abelianization(P);
        CHECK(g.free_rank == 0);
        REQUIRE(g.invariant_factors.size() == 1);
        CHECK(g.invariant_factors[0] == m);
    }
    // Klein bottle <a,b | a b a b^-1>
    AbelianGroup klein = abelianization(pres(2, {"a1 a2 a1 a2^-1"}));
    CHECK(klein.free_rank == 1);
    REQUIRE(klein.invariant_factors.size() == 1);
    CHECK(klein.invariant_factors[0] == 2);
    // braid <a,b | aba = bab>
    AbelianGroup braid = abelianization(pres(2, {"a1 a2 a1 a2^-1 a1^-1 a2^-1"}));
    CHECK(braid.free_rank == 1);
    CHECK(braid.invariant_factors.empty());
}

TEST_CASE("homology of the named complexes") {
    HomologyProfile rp2 = homology(minimal_rp2());
    CHECK(rp2.b0 == 1);
    CHECK(rp2.b1 == 0);
    CHECK(rp2.b2 == 0);
    REQUIRE(rp2.h1_torsion.size() == 1);
    CHECK(rp2.h1_torsion[0] == 2);

    HomologyProfile torus = homology(minimal_torus());
    CHECK(torus.b1 == 2);
    CHECK(torus.b2 == 1);
    CHECK(torus.h1_torsion.empty());

    HomologyProfile g2 = homology(genus2_surface());
    CHECK(g2.b1 == 4);
    CHECK(g2.b2 == 1);
    CHECK(g2.h1_torsion.empty());

    HomologyProfile b3 = homology(bouquet(3).complex);
    CHECK(b3.b1 == 3);
    CHECK(b3.b2 == 0);
}

TEST_CASE("edge-path presentation of the torus") {
    Presentation P = edge_path_presentation(minimal_torus());
    CHECK(P.generator_count == 15); // 21 edges minus 6 tree edges
    CHECK(P.relators.size() == 14);
    AbelianGroup g = abelianization(P);
    CHECK(g.free_rank == 2);
    CHECK(g.invariant_factors.empty());

    Presentation S = tietze_simplify(P);
    CHECK(S.generator_count == 2);
    REQUIRE(S.relators.size() == 1);
    // commutator up to cyclic rotation and inversion
    const Word& r = S.relators[0];
    REQUIRE(r.length() == 4);
    auto ev = r.exponent_vector(2);
    CHECK(ev[0] == 0);
    CHECK(ev[1] == 0);
    CHECK(abelianization(S) == g);
}

TEST_CASE("edge-path presentation basics") {
    Complex2 tri = Complex2::from_triangles(3, {Triangle(0, 1, 2)});
    Presentation P = edge_path_presentation(tri);
    CHECK(P.generator_count == 1);
    REQUIRE(P.relators.size() == 1);
    Presentation S = tietze_simplify(P);
    CHECK(S.generator_count == 0);
    CHECK(S.relators.empty());

    Presentation B = edge_path_presentation(bouquet(4).complex);
    CHECK(B.relators.empty());
    CHECK(B.generator_count == 4);

    Complex2 two = Complex2::from_triangles(6, {Triangle(0, 1, 2), Triangle(3, 4, 5)});
    CHECK_THROWS_AS(edge_path_presentation(two), std::invalid_argument);
}

TEST_CASE("tietze moves preserve the abelianization at every budget") {
    Presentation P = edge_path_presentation(minimal_rp2());
    AbelianGroup expect = abelianization(P);
    for (int budget = 0; budget <= 12; ++budget)
        CHECK(abelianization(tietze_simplify(P, budget)) == expect);
    // a presentation with nothing to eliminate is returned unchanged
    Presentation minimal = pres(2, {"a1 a2 a1 a2^-1"});
    Presentation S = tietze_simplify(minimal);
    CHECK(S.generator_count == 2);
    REQUIRE(S.relators.size() == 1);
    CHECK(S.relators[0] == minimal.relators[0]);
}

TEST_CASE("two homology pipelines agree") {
    std::vector<Complex2> corpus = {minimal_torus(),         minimal_rp2(),
                                    genus2_surface(),        moebius_band().complex,
                                    bouquet(3).complex,      cyclic_complex(6),
                                    telescope(3).complex};
    for (const Complex2& K : corpus) {
        HomologyProfile h = homology(K);
        AbelianGroup via_pi1 = abelianization(edge_path_presentation(K));
        CHECK(via_pi1.free_rank == h.b1);
        CHECK(via_pi1.invariant_factors == h.h1_torsion);
        CHECK(K.euler_characteristic() == h.b0 - h.b1 + h.b2);
    }
}

TEST_CASE("betti bound check") {
    CHECK(betti_bound_check(minimal_torus()));
    CHECK(betti_bound_check(minimal_rp2()));
    CHECK(betti_bound_check(genus2_surface()));
    CHECK(betti_bound_check(
        raag_complex(CoxeterMatrix::right_angled(3, {{0, 1}, {0, 2}, {1, 2}})).complex));
}

TEST_CASE("collapsibility") {
    CHECK(is_collapsible_to_graph(Complex2::from_triangles(3, {Triangle(0, 1, 2)})));
    CHECK_FALSE(is_collapsible_to_graph(minimal_rp2()));
    CHECK_FALSE(is_collapsible_to_graph(minimal_torus()));
    CHECK(is_collapsible_to_graph(moebius_band().complex));
    CHECK(is_collapsible_to_graph(word_disk(W("a1 a2")).complex));
    // collapsible implies b2 = 0 and torsion-free H1
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + int(rng() % 3);
        std::vector<Triangle> tris;
        for (int i = 0; i < 5; ++i) {
            VertexId a = rng() % n, b = rng() % n, c = rng() % n;
            if (a != b && b != c && a != c) tris.emplace_back(a, b, c);
        }
        if (tris.empty()) continue;
        Complex2 K = Complex2::from_triangles(n, tris);
        if (is_collapsible_to_graph(K)) {
            HomologyProfile h = homology(K);
            CHECK(h.b2 == 0);
            CHECK(h.h1_torsion.empty());
        }
    }
}

TEST_CASE("loop classes in the telescope") {
    for (int k : {1, 2, 3, 4, 5, 6}) {
        MarkedComplex T = telescope(k);
        CHECK(T.complex.vertex_count() == 3 * k + 3);
        HomologyProfile h = homology(T.complex);
        CHECK(h.b1 == 1);
        CHECK(h.h1_torsion.empty());
        H1Coordinates coords(T.complex);
        auto base = coords.class_of_loop(T.path("gamma0"));
        for (int i = 0; i < k; ++i) {
            auto ci = coords.class_of_loop(T.path("gamma" + std::to_string(i)));
            CHECK(H1Coordinates::is_multiple(ci, base, Int(1) << i, coords.torsion_factors()));
        }
        auto bd = coords.class_of_loop(T.path("boundary"));
        CHECK(H1Coordinates::is_multiple(bd, base, Int(1) << k, coords.torsion_factors()));
    }
}

TEST_CASE("loop class rejects unknown or open paths") {
    MarkedComplex T = telescope(2);
    CHECK_THROWS_AS(T.path("gamma9"), std::invalid_argument);
    H1Coordinates coords(T.complex);
    CHECK_THROWS_AS(coords.class_of_loop({0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(coords.class_of_loop({0, 99, 3}), std::invalid_argument);
}

TEST_CASE("dyadic curves realize every class") {
    for (int k : {2, 3, 4}) {
        MarkedComplex T = telescope(k);
        H1Coordinates coords(T.complex);
        auto base = coords.class_of_loop(T.path("gamma0"));
        for (long long m = 2; m < (1LL << (k + 1)); ++m) {
            std::vector<VertexId> xi = dyadic_curve(m, T);
            int digits = 0;
            for (long long x = m; x > 0; x >>= 1) digits += int(x & 1);
            CHECK(int(xi.size()) == 3 * digits);
            auto cls = coords.class_of_loop(xi);
            CHECK(H1Coordinates::is_multiple(cls, base, m, coords.torsion_factors()));
        }
        CHECK_THROWS_AS(dyadic_curve(1LL << (k + 1), T), std::invalid_argument);
    }
}

TEST_CASE("moebius band marked classes") {
    MarkedComplex M = moebius_band();
    CHECK(M.complex.vertex_count() == 6);
    CHECK(M.complex.triangle_count() == 9);
    CHECK(M.complex.euler_characteristic() == 0);
    H1Coordinates coords(M.complex);
    auto core = coords.class_of_loop(M.path("core"));
    auto bd = coords.class_of_loop(M.path("boundary"));
    CHECK(H1Coordinates::is_multiple(bd, core, 2, coords.torsion_factors()));
    CHECK_FALSE(H1Coordinates::is_multiple(bd, core, 1, coords.torsion_factors()));
}
