#ifndef KW_CONSTRUCTIONS_HPP
#define KW_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kw/complex.hpp"
#include "kw/homology.hpp"
#include "kw/word.hpp"

namespace kw {

// Symmetric matrix of relation orders; only finite off-diagonal entries are
// stored (keyed i < j), everything else is infinite.
struct CoxeterMatrix {
    int n = 0;
    std::map<std::pair<int, int>, int> finite; // (i,j), i<j -> m_ij >= 2

    static CoxeterMatrix right_angled(int n, const std::vector<std::pair<int, int>>& commuting);

    void set(int i, int j, int m);
    int relation_count() const { return static_cast<int>(finite.size()); }
    bool all_entries_are(int m) const;
    bool all_entries_at_least(int m) const;
};

// A complex together with a base vertex and named closed edge paths
// (generator circles, telescope curves, boundaries).  Paths are cyclic
// vertex sequences; the wraparound edge is implied.
struct MarkedComplex {
    Complex2 complex;
    VertexId base_vertex = 0;
    std::map<std::string, std::vector<VertexId>> marked_paths;

    const std::vector<VertexId>& path(const std::string& name) const;
    bool has_path(const std::string& name) const { return marked_paths.count(name) > 0; }
};

// Wedge of n triangle-circles; 2n+1 vertices, 3n edges.  Circle i is marked
// "a{i+1}" and runs base -> 2i+1 -> 2i+2 -> base.
MarkedComplex bouquet(int n);

// The 7-vertex triangulation with triangles {i,i+1,i+3} and {i,i+2,i+3}
// mod 7; 1-skeleton K7, closed orientable, genus 1.
Complex2 minimal_torus();

// The 6-vertex triangulation of the projective plane (icosahedron
// quotient); 1-skeleton K6, 10 triangles.
Complex2 minimal_rp2();

// minimal_rp2 with one triangle removed.  Marks: "core" (the curve whose
// class generates H1 = Z), "boundary" (the 3-edge boundary, twice the core
// class), "circle" (the generator circle used by the Coxeter complexes).
MarkedComplex moebius_band();

// minimal_torus with two adjacent triangles and their shared edge removed;
// the quadrilateral hole is marked "boundary".
MarkedComplex punctured_torus();

// Two punctured tori glued along the hole with the shifted identification;
// 10 vertices, closed orientable genus 2.
Complex2 genus2_surface();

// K(n,m): bouquet of generator circles plus one minimal torus per finite
// entry (all entries 2).  Exactly 2n+2m+1 vertices.  Generator circles stay
// marked.
MarkedComplex raag_complex(const CoxeterMatrix& M);

// P(n,m): wedge of projective planes plus one torus per finite entry, glued
// along the in-plane generator circles.  Exactly 5n+2m+1 vertices.
MarkedComplex racg_complex(const CoxeterMatrix& M);

// P_w: bouquet plus a triangulated disk whose boundary spells w (3 edges
// per letter).  Marks: the circles, "boundary" (the 3l-step boundary path),
// "delta_p" (the 2-simplex at the base vertex reserved for removal).
MarkedComplex word_disk(const Word& w);
MarkedComplex word_disk_over(const Word& w, int n_generators);

// Tower of k Moebius bands, each glued core-to-previous-boundary through
// the common base vertex.  3k+3 vertices.  Marks "gamma0".."gamma{k-1}" and
// "boundary"; the class of gamma_i is 2^i times the class of gamma_0.
MarkedComplex telescope(int k);

// xi(m): the closed path realizing m times the base class via the binary
// expansion of m.  T must be telescope(k) for the least k with m < 2^{k+1}.
std::vector<VertexId> dyadic_curve(long long m, const MarkedComplex& T);

// X_m: telescope capped by a disk along xi(m); pi_1 = Z/m.  m = 1 gives the
// single-vertex complex.
Complex2 cyclic_complex(long long m);

// The one-relation complex for <a_1..a_n | w^m = v^m>; w, v cyclically
// reduced of length >= 2, m >= 2.
Complex2 one_relator_power_complex(int n, const Word& w, const Word& v, long long m);

struct PowerRelation {
    Word w, v;
    long long m;
};

// Union of the single-relation complexes over one shared bouquet.
Complex2 multi_relator_complex(int n, const std::vector<PowerRelation>& relations);

// Artin / Coxeter groups of large type (all finite entries >= 3).  Even
// entries 2k become (a_i a_j)^k = (a_j a_i)^k; odd entries 2k+1 use the
// modified capping that wedges the matching generator circle into the
// attaching curve.
Complex2 artin_large_complex(const CoxeterMatrix& M);
Complex2 coxeter_large_complex(const CoxeterMatrix& M);

// Symbolic presentations matching the constructions, for certification.
Presentation one_relator_presentation(int n, const Word& w, const Word& v, long long m);
Presentation multi_relator_presentation(int n, const std::vector<PowerRelation>& relations);
Presentation artin_presentation(const CoxeterMatrix& M);
Presentation coxeter_presentation(const CoxeterMatrix& M);

// <a_i a_j>^m: alternating product of length m starting with a_i.
Word alternating_product(int i, int j, int m);

Complex2 remove_triangle(const Complex2& K, const Triangle& t);

} // namespace kw

#endif
