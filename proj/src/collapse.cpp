#include "kw/collapse.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace kw {

namespace {

// Which triangles survive fully determines the reachable collapses, so the
// search memoizes on the surviving triangle set only.
struct Collapser {
    const Complex2& K;
    std::vector<std::vector<int>> tris_of_edge;
    std::set<std::vector<char>> seen;
    std::int64_t budget;

    Collapser(const Complex2& k, std::int64_t b) : K(k), budget(b) {
        tris_of_edge.resize(K.edge_count());
        for (int ti = 0; ti < K.triangle_count(); ++ti)
            for (const auto& e : K.triangles()[ti].edges())
                tris_of_edge[K.edge_index(e.v[0], e.v[1])].push_back(ti);
    }

    bool search(const std::vector<char>& alive) {
        if (--budget < 0) return false;
        if (std::find(alive.begin(), alive.end(), char(1)) == alive.end()) return true;

        for (int ei = 0; ei < K.edge_count(); ++ei) {
            int count = 0, last = -1;
            for (int ti : tris_of_edge[ei])
                if (alive[ti]) {
                    ++count;
                    last = ti;
                }
            if (count != 1) continue; // not a free face
            std::vector<char> next = alive;
            next[last] = 0;
            if (!seen.insert(next).second) continue;
            if (search(next)) return true;
            if (budget < 0) return false;
        }
        return false;
    }
};

} // namespace

bool is_collapsible_to_graph(const Complex2& K, std::int64_t state_budget) {
    if (K.triangles().empty()) return true;
    Collapser c(K, state_budget);
    return c.search(std::vector<char>(K.triangle_count(), 1));
}

} // namespace kw
