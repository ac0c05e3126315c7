#ifndef KW_GLUE_HPP
#define KW_GLUE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "kw/complex.hpp"

namespace kw {

// Injective simplex-preserving map of a complex into a target.  The target
// is supplied per operation; the embedding owns only the source and the
// vertex assignment.
struct Embedding {
    Complex2 source;
    std::vector<VertexId> vertex_map; // source id -> target id
};

// Throws std::invalid_argument when the map is not injective, runs out of
// range, or fails to carry some simplex of the source onto a simplex of the
// target.
void validate_embedding(const Embedding& e, const Complex2& target);

// An embedding is maximal when every simplex of the target whose 1-skeleton
// lies in the image lies wholly in the image.  For 2-complexes the only
// nontrivial case is a target triangle all of whose edges are image edges.
bool is_maximal(const Embedding& e, const Complex2& target);

// Raised when a gluing or identification would not be simplicial; the
// message names the offending simplex pair.
class GlueError : public std::runtime_error {
  public:
    explicit GlueError(const std::string& what) : std::runtime_error(what) {}
};

struct GlueResult {
    Complex2 complex;
    bool lemma22_condition1 = false;
    bool lemma22_condition2 = false;
    bool directly_validated = false;
    std::vector<VertexId> x_map; // X vertex -> result vertex
    std::vector<VertexId> y_map; // Y vertex -> result vertex
};

// Pushout X u_Z Y.  X keeps its vertex ids; vertices of Y outside the image
// of jZ are appended in ascending order.  Condition (1) of the gluing lemma
// (a unique edge between any two Z-vertices in the result) is checked on
// the pushout; condition (2) asks for one maximal embedding.  When (2)
// fails the gluing falls back to direct pairwise validation, which is
// sufficient on its own: every simplex pair from the two sides must meet in
// a common face lying in Z.
GlueResult glue(const Complex2& X, const Complex2& Y, const Embedding& iZ, const Embedding& jZ);

// The fallback check on its own: every pair of simplices not coming from Z
// must intersect in a simplex of Z.  Throws GlueError naming the offending
// pair.
void direct_validate_gluing(const Complex2& X, const Complex2& Y, const Embedding& iZ,
                            const Embedding& jZ);

// Quotient of a single complex identifying two simple closed edge paths of
// equal length, position by position (c1[i] ~ c2[i]).  The result is
// validated directly, with the same duplicate-simplex diagnostics as glue.
GlueResult identify_curves(const Complex2& K, const std::vector<VertexId>& c1,
                           const std::vector<VertexId>& c2);

} // namespace kw

#endif
