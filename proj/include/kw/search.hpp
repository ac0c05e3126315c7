#ifndef KW_SEARCH_HPP
#define KW_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kw/canonical.hpp"
#include "kw/complex.hpp"

namespace kw {

struct EnumerationConstraints {
    int max_vertices = 5;
    bool require_connected = true;
    bool require_pure2 = false;
    bool require_closed_surface = false;
    std::optional<int> euler_characteristic;
    std::optional<bool> orientable; // only meaningful with require_closed_surface
    std::function<bool(const Complex2&)> post_filter; // optional extra predicate
    std::string filter_description;

    // Combinatorial explosion guard; raising it past 8 needs the explicit
    // acknowledgment flag.
    int hard_cap = 8;
    bool acknowledge_large = false;
};

// One canonical representative per isomorphism class meeting the
// constraints, in a deterministic order.  Parallel and serial runs produce
// the same list.
std::vector<Complex2> enumerate_complexes(const EnumerationConstraints& c, int threads = 1);

// Progress/count bookkeeping for certifications.
struct CertResult {
    std::string property;
    int minimal_vertex_count = -1; // -1: no witness up to the scanned bound
    std::optional<Complex2> witness;
    bool exhaustively_checked_below = false;
    std::uint64_t complexes_examined = 0;
    std::vector<Complex2> undecided; // freeness screen failures, when relevant
};

enum class Freeness { Free, NonFree, Undecided };

// Sound screen: collapsibility or a relator-free simplified presentation
// certify Free; torsion in H1 certifies NonFree; anything else is
// Undecided and must be surfaced, never passed silently.
Freeness freeness_screen(const Complex2& K);

// Named properties: "h1-torsion", "nonfree", "closed-orientable-chi0",
// "closed-orientable-chi-minus2", "closed-surface".
CertResult certify_min_vertices(const std::string& property, int n_start, int n_max,
                                int threads = 1, bool acknowledge_large = false);

std::vector<std::string> known_certification_properties();

} // namespace kw

#endif
