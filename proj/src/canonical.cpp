#include "kw/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kw {

Complex2 relabel(const Complex2& K, const std::vector<VertexId>& perm) {
    if (static_cast<int>(perm.size()) != K.vertex_count())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(K.edges().size());
    for (const auto& e : K.edges()) edges.emplace_back(perm[e.v[0]], perm[e.v[1]]);
    std::vector<Triangle> tris;
    tris.reserve(K.triangles().size());
    for (const auto& t : K.triangles()) tris.emplace_back(perm[t.v[0]], perm[t.v[1]], perm[t.v[2]]);
    return Complex2::make(K.vertex_count(), std::move(edges), std::move(tris));
}

namespace {

// Encoding used for leaf comparison: vertex count, edges, triangles, all
// flattened after relabeling.
using Encoding = std::vector<VertexId>;

Encoding encode(const Complex2& K) {
    Encoding enc;
    enc.reserve(1 + 2 * K.edges().size() + 3 * K.triangles().size());
    enc.push_back(K.vertex_count());
    for (const auto& e : K.edges()) {
        enc.push_back(e.v[0]);
        enc.push_back(e.v[1]);
    }
    enc.push_back(-1);
    for (const auto& t : K.triangles()) {
        enc.push_back(t.v[0]);
        enc.push_back(t.v[1]);
        enc.push_back(t.v[2]);
    }
    return enc;
}

struct Refiner {
    const Complex2& K;
    int n;
    std::vector<std::vector<VertexId>> adj;              // edge neighbors
    std::vector<std::vector<std::array<VertexId, 2>>> tri_at; // other two corners

    explicit Refiner(const Complex2& k) : K(k), n(k.vertex_count()), adj(n), tri_at(n) {
        for (const auto& e : K.edges()) {
            adj[e.v[0]].push_back(e.v[1]);
            adj[e.v[1]].push_back(e.v[0]);
        }
        for (const auto& t : K.triangles()) {
            tri_at[t.v[0]].push_back({t.v[1], t.v[2]});
            tri_at[t.v[1]].push_back({t.v[0], t.v[2]});
            tri_at[t.v[2]].push_back({t.v[0], t.v[1]});
        }
    }

    // Iterated refinement; colors are normalized so that equal structural
    // keys in isomorphic complexes receive equal color ids.
    std::vector<int> refine(std::vector<int> color) const {
        for (;;) {
            // key: old color + sorted neighbor colors + sorted corner color pairs
            std::vector<std::pair<std::vector<int>, int>> keyed(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> key;
                key.push_back(color[v]);
                std::vector<int> nb;
                for (VertexId w : adj[v]) nb.push_back(color[w]);
                std::sort(nb.begin(), nb.end());
                key.push_back(-1);
                key.insert(key.end(), nb.begin(), nb.end());
                std::vector<std::pair<int, int>> tc;
                for (const auto& pr : tri_at[v]) {
                    int a = color[pr[0]], b = color[pr[1]];
                    tc.emplace_back(std::min(a, b), std::max(a, b));
                }
                std::sort(tc.begin(), tc.end());
                key.push_back(-2);
                for (auto& [a, b] : tc) {
                    key.push_back(a);
                    key.push_back(b);
                }
                keyed[v] = {std::move(key), v};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted = keyed;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(n);
            int c = -1;
            const std::vector<int>* prev = nullptr;
            for (auto& [key, v] : sorted) {
                if (!prev || key != *prev) {
                    ++c;
                    prev = &key;
                }
                next[v] = c;
            }
            if (next == color) return color;
            color = std::move(next);
        }
    }

    std::vector<int> initial() const {
        std::vector<int> color(n, 0);
        return refine(std::move(color));
    }
};

struct CanonSearch {
    const Complex2& K;
    const Refiner& ref;
    Encoding best;
    std::vector<VertexId> best_perm;
    bool have_best = false;

    CanonSearch(const Complex2& k, const Refiner& r) : K(k), ref(r) {}

    void leaf(const std::vector<int>& color) {
        // Discrete coloring: color ranks are the canonical labels.
        std::vector<VertexId> perm(color.begin(), color.end());
        Complex2 rel = relabel(K, perm);
        Encoding enc = encode(rel);
        if (!have_best || enc < best) {
            best = std::move(enc);
            best_perm = std::move(perm);
            have_best = true;
        }
    }

    void run(std::vector<int> color) {
        // First non-singleton cell in color order.
        const int n = ref.n;
        std::vector<int> count(n, 0);
        for (int c : color) ++count[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            leaf(color);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            // Individualize v: split it off in front of its cell.
            std::vector<int> next(n);
            for (int w = 0; w < n; ++w) {
                int c = color[w];
                next[w] = c > target ? c + 1 : c;
            }
            next[v] = target;
            for (int w = 0; w < n; ++w)
                if (w != v && color[w] == target) next[w] = target + 1;
            run(ref.refine(std::move(next)));
        }
    }
};

} // namespace

CanonicalComplex canonical_form(const Complex2& K) {
    if (K.vertex_count() == 0) return {K, {}};
    Refiner ref(K);
    CanonSearch search(K, ref);
    search.run(ref.initial());
    CanonicalComplex cc;
    cc.labeling = search.best_perm;
    cc.complex = relabel(K, cc.labeling);
    return cc;
}

bool CanonicalComplex::operator<(const CanonicalComplex& o) const {
    if (complex.vertex_count() != o.complex.vertex_count())
        return complex.vertex_count() < o.complex.vertex_count();
    if (complex.edges() != o.complex.edges()) return complex.edges() < o.complex.edges();
    return complex.triangles() < o.complex.triangles();
}

std::string CanonicalComplex::key() const {
    std::ostringstream os;
    os << complex.vertex_count() << ';';
    for (const auto& e : complex.edges()) os << e.v[0] << ',' << e.v[1] << ' ';
    os << ';';
    for (const auto& t : complex.triangles()) os << t.v[0] << ',' << t.v[1] << ',' << t.v[2] << ' ';
    return os.str();
}

bool isomorphic(const Complex2& A, const Complex2& B) {
    if (A.vertex_count() != B.vertex_count() || A.edge_count() != B.edge_count() ||
        A.triangle_count() != B.triangle_count())
        return false;
    return canonical_form(A) == canonical_form(B);
}

} // namespace kw
