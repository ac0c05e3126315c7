#ifndef KW_HOMOLOGY_HPP
#define KW_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "kw/complex.hpp"
#include "kw/smith.hpp"
#include "kw/word.hpp"

namespace kw {

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> invariant_factors; // each >= 2, d_i | d_{i+1}

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string str() const;
};

struct HomologyProfile {
    int b0 = 0, b1 = 0, b2 = 0;
    std::vector<Int> h1_torsion; // invariant factors >= 2

    AbelianGroup h1() const { return {b1, h1_torsion}; }
};

struct Presentation {
    int generator_count = 0;
    std::vector<Word> relators;
};

// Integral simplicial boundary operators with the orientation induced by
// sorted vertex order.
IntMatrix boundary1(const Complex2& K);
IntMatrix boundary2(const Complex2& K);

HomologyProfile homology(const Complex2& K);

AbelianGroup abelianization(const Presentation& P);

// b1 <= C(s0-1, 2) and b2 <= C(s0-1, 3).
bool betti_bound_check(const Complex2& K);

// Edge-path group: generators are the edges outside a breadth-first
// spanning tree (lexicographic tie-breaking), one relator per triangle.
Presentation edge_path_presentation(const Complex2& K, VertexId base = 0);

// Bounded greedy simplification by Tietze moves: free/cyclic reduction,
// dropping trivial and duplicate relators, and eliminating a generator that
// occurs exactly once in some relator.  The result presents the same group.
Presentation tietze_simplify(const Presentation& P, int move_budget = 10000);

// Generators that still occur in some relator or were never eliminated; a
// simplified presentation of a free group has no relators left.
int used_generator_count(const Presentation& P);

// Coordinates of 1-cycles in H1(K), computed once per complex.  free_part
// lives in a fixed basis of H1/torsion; torsion_part collects the classes
// modulo each invariant factor.
class H1Coordinates {
  public:
    explicit H1Coordinates(const Complex2& K);

    struct ClassVector {
        std::vector<Int> free_part;
        std::vector<Int> torsion_part; // reduced mod the matching invariant factor

        bool operator==(const ClassVector& o) const {
            return free_part == o.free_part && torsion_part == o.torsion_part;
        }
    };

    // The path is a closed vertex sequence (first == last implied; the
    // wraparound edge is taken automatically).
    ClassVector class_of_loop(const std::vector<VertexId>& loop) const;

    // Scalar multiple: c == m * b componentwise (free and torsion parts).
    static bool is_multiple(const ClassVector& c, const ClassVector& b, const Int& m,
                            const std::vector<Int>& torsion_factors);

    const std::vector<Int>& torsion_factors() const { return torsion_factors_; }

  private:
    const Complex2& K_;
    IntMatrix kernel_coords_; // rows = kernel basis coordinates functional
    IntMatrix u2_;            // transform to SNF basis of the quotient
    std::vector<Int> diag2_;
    int rank2_ = 0;
    std::vector<Int> torsion_factors_;
};

// Edge vector of a closed vertex path (cyclic).
std::vector<Int> loop_edge_vector(const Complex2& K, const std::vector<VertexId>& loop);

} // namespace kw

#endif
