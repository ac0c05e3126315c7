#ifndef KW_COLLAPSE_HPP
#define KW_COLLAPSE_HPP

#include <cstdint>

#include "kw/complex.hpp"

namespace kw {

// Free-face collapsibility onto a 1-complex: can repeated (edge, triangle)
// collapses remove every triangle?  Greedy order first, then backtracking
// over collapse orders up to the state budget.  A positive answer certifies
// a free fundamental group; a negative one only means no collapse was found
// within the budget.
bool is_collapsible_to_graph(const Complex2& K, std::int64_t state_budget = 1000000);

} // namespace kw

#endif
