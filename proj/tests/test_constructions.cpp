#include <doctest.h>

#include "kw/bounds.hpp"
#include "kw/canonical.hpp"
#include "kw/constructions.hpp"
#include "kw/homology.hpp"

using namespace kw;

TEST_CASE("bouquet shape") {
    for (int n : {1, 3, 5}) {
        MarkedComplex B = bouquet(n);
        CHECK(B.complex.vertex_count() == 2 * n + 1);
        CHECK(B.complex.edge_count() == 3 * n);
        CHECK(B.complex.triangles().empty());
        CHECK(validate(B.complex).valid());
        CHECK(validate(B.complex).connected);
        CHECK(homology(B.complex).b1 == n);
        for (int i = 1; i <= n; ++i) CHECK(B.path("a" + std::to_string(i)).size() == 3);
    }
    CHECK_THROWS_AS(bouquet(0), std::invalid_argument);
}

TEST_CASE("torus cell circles span its homology") {
    // the two marked circles used when a torus cell is glued onto a
    // commuting pair intersect only at the wedge vertex
    Complex2 T = minimal_torus();
    CHECK(T.has_edge(0, 1));
    CHECK(T.has_edge(1, 2));
    CHECK(T.has_edge(0, 2));
    CHECK(T.has_edge(0, 3));
    CHECK(T.has_edge(3, 6));
    CHECK(T.has_edge(0, 6));
    H1Coordinates coords(T);
    auto a = coords.class_of_loop({0, 1, 2});
    auto b = coords.class_of_loop({0, 3, 6});
    // distinct nonzero primitive classes
    CHECK(a.free_part != b.free_part);
    bool a_nonzero = a.free_part[0] != 0 || a.free_part[1] != 0;
    CHECK(a_nonzero);
}

TEST_CASE("raag complexes: counts and homology") {
    // Z^2 is the minimal torus itself
    MarkedComplex A2 = raag_complex(CoxeterMatrix::right_angled(2, {{0, 1}}));
    CHECK(A2.complex.vertex_count() == 7);
    CHECK(isomorphic(A2.complex, minimal_torus()));

    // no relations: the bouquet
    MarkedComplex F3 = raag_complex(CoxeterMatrix::right_angled(3, {}));
    CHECK(F3.complex.vertex_count() == 7);
    CHECK(F3.complex == bouquet(3).complex);

    // all pairs commuting on three generators
    MarkedComplex A3 = raag_complex(CoxeterMatrix::right_angled(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(A3.complex.vertex_count() == 13);
    HomologyProfile h = homology(A3.complex);
    CHECK(h.b1 == 3);
    CHECK(h.b2 == 3);
    CHECK(h.h1_torsion.empty());

    CHECK_THROWS_AS(raag_complex([] {
                        CoxeterMatrix M;
                        M.n = 2;
                        M.set(0, 1, 3);
                        return M;
                    }()),
                    std::invalid_argument);
}

TEST_CASE("racg complexes: counts and homology") {
    MarkedComplex Z2 = racg_complex(CoxeterMatrix::right_angled(1, {}));
    CHECK(Z2.complex.vertex_count() == 6);
    CHECK(isomorphic(Z2.complex, minimal_rp2()));

    MarkedComplex Z22 = racg_complex(CoxeterMatrix::right_angled(2, {{0, 1}}));
    CHECK(Z22.complex.vertex_count() == 13);
    HomologyProfile h = homology(Z22.complex);
    CHECK(h.b1 == 0);
    REQUIRE(h.h1_torsion.size() == 2);
    CHECK(h.h1_torsion[0] == 2);
    CHECK(h.h1_torsion[1] == 2);
}

TEST_CASE("vertex counts for every right-angled matrix up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> chosen;
            for (size_t b = 0; b < pairs.size(); ++b)
                if (mask & (1u << b)) chosen.push_back(pairs[b]);
            const int m = static_cast<int>(chosen.size());
            CoxeterMatrix M = CoxeterMatrix::right_angled(n, chosen);
            Complex2 A = raag_complex(M).complex;
            CHECK(A.vertex_count() == 2 * n + 2 * m + 1);
            CHECK(validate(A).valid());
            Complex2 C = racg_complex(M).complex;
            CHECK(C.vertex_count() == 5 * n + 2 * m + 1);
            CHECK(validate(C).valid());
        }
    }
}

TEST_CASE("genus-2 surface") {
    Complex2 G = genus2_surface();
    CHECK(G.vertex_count() == 10);
    SurfaceReport rep = classify_surface(G);
    CHECK(rep.is_closed_surface);
    CHECK(rep.orientable);
    CHECK(rep.genus == 2);
    // the complexity of the genus-2 group is 9, so this triangulation does
    // not realize it; only the surface facts are asserted
    CHECK(kw_surface(2, true) == 9);
}

TEST_CASE("word disk respects the stated vertex budget and validates") {
    struct Case {
        const char* word;
        int len;
    };
    for (const Case& c : {Case{"a1 a2", 2}, Case{"a1 a1", 2}, Case{"a1 a2 a1^-1 a2^-1", 4},
                          Case{"a1 a2 a3 a2", 4}, Case{"a1 a1 a1", 3},
                          Case{"a1 a2 a1 a2 a1 a2", 6}}) {
        Word w = parse_word(c.word);
        MarkedComplex P = word_disk(w);
        CHECK(validate(P.complex).valid());
        CHECK(validate(P.complex).connected);
        CHECK(int(P.path("boundary").size()) == 3 * c.len);
        // a marked 2-simplex at the base vertex exists
        const auto& dp = P.path("delta_p");
        REQUIRE(dp.size() == 3);
        CHECK(dp[0] == P.base_vertex);
        CHECK(P.complex.has_triangle(dp[0], dp[1], dp[2]));
        // interior vertices stay within twice the word length
        int n = 0;
        for (const Letter& l : w.letters) n = std::max(n, l.gen + 1);
        CHECK(P.complex.vertex_count() - (2 * n + 1) <= 2 * c.len);
    }
    CHECK_THROWS_AS(word_disk(parse_word("a1")), std::invalid_argument);
    CHECK_THROWS_AS(word_disk(parse_word("a1 a2 a2^-1 a1")), std::invalid_argument);
}

TEST_CASE("word disk is a disk glued to the bouquet") {
    // P_w is homotopy equivalent to the bouquet with one 2-cell attached
    // along w, so chi = chi(bouquet) + 1 and H1 matches <a_1..a_n | w>.
    for (const char* ws : {"a1 a2", "a1 a1", "a1 a2 a1^-1 a2^-1", "a1 a1 a1"}) {
        Word w = parse_word(ws);
        int n = 0;
        for (const Letter& l : w.letters) n = std::max(n, l.gen + 1);
        MarkedComplex P = word_disk(w);
        Presentation sym;
        sym.generator_count = n;
        sym.relators.push_back(w);
        AbelianGroup expect = abelianization(sym);
        AbelianGroup got = abelianization(edge_path_presentation(P.complex));
        CHECK(got == expect);
    }
}

TEST_CASE("telescope vertex counts") {
    CHECK(telescope(1).complex == moebius_band().complex);
    for (int k = 1; k <= 6; ++k) CHECK(telescope(k).complex.vertex_count() == 3 * k + 3);
    CHECK_THROWS_AS(telescope(0), std::invalid_argument);
}

TEST_CASE("cyclic complexes") {
    CHECK(cyclic_complex(1) == Complex2::single_vertex());
    CHECK(isomorphic(cyclic_complex(2), minimal_rp2()));
    for (long long m = 2; m <= 32; ++m) {
        Complex2 X = cyclic_complex(m);
        CHECK(validate(X).valid());
        HomologyProfile h = homology(X);
        CHECK(h.b0 == 1);
        CHECK(h.b1 == 0);
        REQUIRE(h.h1_torsion.size() == 1);
        CHECK(h.h1_torsion[0] == m);
        CHECK(double(X.vertex_count()) <= 4.0 * std::log2(double(m)) + 4.0 + 1e-9);
    }
    // m=4: the telescope construction stays within the coarse bound 12
    CHECK(cyclic_complex(4).vertex_count() <= 12);
}

TEST_CASE("construction/bound coherence") {
    // s0 of each construction is at most the matching formula evaluator
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
        CoxeterMatrix M = CoxeterMatrix::right_angled(n, all);
        CHECK(double(raag_complex(M).complex.vertex_count()) <=
              raag_bounds(n, all.size()).upper + 1e-9);
        CHECK(double(racg_complex(M).complex.vertex_count()) <=
              racg_bounds(n, all.size()).upper + 1e-9);
    }
    for (long long m : {2, 3, 7, 12, 30}) {
        CHECK(double(cyclic_complex(m).vertex_count()) <= cyclic_bounds(m).upper + 1e-9);
    }
}
