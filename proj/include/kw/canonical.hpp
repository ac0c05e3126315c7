#ifndef KW_CANONICAL_HPP
#define KW_CANONICAL_HPP

#include <string>
#include <vector>

#include "kw/complex.hpp"

namespace kw {

// Canonically relabeled copy of a complex.  Two complexes are isomorphic
// exactly when their canonical forms compare equal.
struct CanonicalComplex {
    Complex2 complex;
    std::vector<VertexId> labeling; // labeling[original id] = canonical id

    bool operator==(const CanonicalComplex& o) const { return complex == o.complex; }
    bool operator!=(const CanonicalComplex& o) const { return !(*this == o); }
    bool operator<(const CanonicalComplex& o) const;

    // Compact string encoding, usable as a hash key.
    std::string key() const;
};

// Complete invariant via color refinement (edge degree, triangle degree,
// neighbor color multisets) followed by backtracking over the remaining
// labelings, keeping the lexicographically smallest relabeled simplex
// encoding.
CanonicalComplex canonical_form(const Complex2& K);

bool isomorphic(const Complex2& A, const Complex2& B);

// Relabel by an explicit permutation: perm[old] = new.
Complex2 relabel(const Complex2& K, const std::vector<VertexId>& perm);

} // namespace kw

#endif
