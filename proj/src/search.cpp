#include "kw/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "kw/collapse.hpp"
#include "kw/homology.hpp"

namespace kw {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) out.emplace_back(a, b);
    return out;
}

std::vector<Triangle> all_triples(int n) {
    std::vector<Triangle> out;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c) out.emplace_back(a, b, c);
    return out;
}

bool uses_all_vertices(const Complex2& K) {
    if (K.vertex_count() == 1) return true;
    std::vector<char> hit(K.vertex_count(), 0);
    for (const auto& e : K.edges()) {
        hit[e.v[0]] = 1;
        hit[e.v[1]] = 1;
    }
    return std::find(hit.begin(), hit.end(), char(0)) == hit.end();
}

bool is_pure2(const Complex2& K) {
    if (K.triangles().empty()) return false;
    std::vector<char> vertex_in_tri(K.vertex_count(), 0);
    for (const auto& t : K.triangles())
        for (VertexId v : t.v) vertex_in_tri[v] = 1;
    if (std::find(vertex_in_tri.begin(), vertex_in_tri.end(), char(0)) != vertex_in_tri.end())
        return false;
    for (const auto& e : K.edges())
        if (K.triangles_on_edge(e.v[0], e.v[1]).empty()) return false;
    return true;
}

// ---------------------------------------------------------------------
// General enumeration: connected graphs on exactly n vertices, then every
// triangle subset of each graph, deduplicated by canonical form.  Feasible
// through n = 5; the closed-surface searches use the dedicated generator
// below instead.
// ---------------------------------------------------------------------

std::vector<Complex2> connected_graph_reps(int n) {
    std::vector<Complex2> reps;
    std::set<std::string> seen;
    const auto pairs = all_pairs(n);
    const int np = static_cast<int>(pairs.size());
    for (std::uint64_t mask = 0; mask < (1ULL << np); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < np; ++i)
            if (mask & (1ULL << i)) edges.push_back(pairs[i]);
        Complex2 G = Complex2::make(n, std::move(edges), {});
        if (!G.is_connected() || !uses_all_vertices(G)) continue;
        CanonicalComplex cf = canonical_form(G);
        if (seen.insert(cf.key()).second) reps.push_back(cf.complex);
    }
    return reps;
}

std::vector<Triangle> triangles_of_graph(const Complex2& G) {
    std::vector<Triangle> out;
    for (const auto& t : all_triples(G.vertex_count()))
        if (G.has_edge(t.v[0], t.v[1]) && G.has_edge(t.v[0], t.v[2]) &&
            G.has_edge(t.v[1], t.v[2]))
            out.push_back(t);
    return out;
}

struct LevelResult {
    // canonical key -> canonical complex, merged deterministically
    std::map<std::string, Complex2> classes;
    std::uint64_t examined = 0;
};

LevelResult enumerate_general_level(int n, const EnumerationConstraints& c, int threads) {
    LevelResult result;
    if (n == 1) {
        Complex2 K = Complex2::single_vertex();
        result.examined = 1;
        bool ok = !c.require_pure2 && !c.require_closed_surface;
        if (ok && c.euler_characteristic && *c.euler_characteristic != 1) ok = false;
        if (ok && c.post_filter && !c.post_filter(K)) ok = false;
        if (ok) result.classes.emplace(canonical_form(K).key(), K);
        return result;
    }

    std::vector<Complex2> graphs = connected_graph_reps(n);
    std::mutex mtx;
    std::atomic<size_t> next_graph{0};

    auto worker = [&]() {
        LevelResult local;
        for (;;) {
            size_t gi = next_graph.fetch_add(1);
            if (gi >= graphs.size()) break;
            const Complex2& G = graphs[gi];
            std::vector<Triangle> tris = triangles_of_graph(G);
            const int nt = static_cast<int>(tris.size());
            for (std::uint64_t mask = 0; mask < (1ULL << nt); ++mask) {
                std::vector<Triangle> chosen;
                for (int i = 0; i < nt; ++i)
                    if (mask & (1ULL << i)) chosen.push_back(tris[i]);
                Complex2 K = Complex2::make(n, G.edges(), std::move(chosen));
                ++local.examined;
                if (c.require_pure2 && !is_pure2(K)) continue;
                if (c.require_closed_surface && !classify_surface(K).is_closed_surface) continue;
                if (c.euler_characteristic && K.euler_characteristic() != *c.euler_characteristic)
                    continue;
                if (c.orientable) {
                    SurfaceReport rep = classify_surface(K);
                    if (!rep.is_closed_surface || rep.orientable != *c.orientable) continue;
                }
                if (c.post_filter && !c.post_filter(K)) continue;
                CanonicalComplex cf = canonical_form(K);
                local.classes.emplace(cf.key(), cf.complex);
            }
        }
        std::lock_guard<std::mutex> lock(mtx);
        result.examined += local.examined;
        for (auto& [k, v] : local.classes) result.classes.emplace(k, std::move(v));
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return result;
}

// ---------------------------------------------------------------------
// Closed-surface enumeration at exactly n vertices.  Triangle-driven DFS:
// the lexicographically first edge with only one incident triangle must be
// completed next, which makes every completed set reachable along exactly
// one path (no duplicate leaves).  Partial-link degrees prune branches
// early: in a closed surface no vertex link may acquire degree three.
// ---------------------------------------------------------------------

struct SurfaceSearch {
    int n;
    std::optional<int> chi;
    std::optional<bool> orientable;
    std::vector<Triangle> triples;
    int max_triangles;

    // linkdeg[a][b] = number of chosen triangles containing the edge {a,b};
    // doubles as edge multiplicity and link degree.
    std::vector<std::vector<int>> linkdeg;
    std::vector<Triangle> chosen;
    LevelResult* out = nullptr;
    std::mutex* out_mtx = nullptr;

    // When splitting work, the DFS runs only the branch whose first-level
    // choice index matches `branch_filter` (or all when -1).
    int branch_filter = -1;
    int depth = 0;

    explicit SurfaceSearch(int n_) : n(n_), triples(all_triples(n_)) {
        linkdeg.assign(n, std::vector<int>(n, 0));
        // V - E + F = chi and 3F = 2E force F = 2(V - chi).
        max_triangles = chi ? 2 * (n - *chi) : (2 * (n * (n - 1) / 2)) / 3;
    }

    void set_budget() { max_triangles = chi ? 2 * (n - *chi) : (2 * (n * (n - 1) / 2)) / 3; }

    bool can_add(const Triangle& t) const {
        return linkdeg[t.v[0]][t.v[1]] < 2 && linkdeg[t.v[0]][t.v[2]] < 2 &&
               linkdeg[t.v[1]][t.v[2]] < 2;
    }

    void add(const Triangle& t, int delta) {
        linkdeg[t.v[0]][t.v[1]] += delta;
        linkdeg[t.v[1]][t.v[0]] += delta;
        linkdeg[t.v[0]][t.v[2]] += delta;
        linkdeg[t.v[2]][t.v[0]] += delta;
        linkdeg[t.v[1]][t.v[2]] += delta;
        linkdeg[t.v[2]][t.v[1]] += delta;
        (void)t;
    }

    // Lexicographically smallest deficient edge, if any.
    bool deficient_edge(VertexId& a, VertexId& b) const {
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j)
                if (linkdeg[i][j] == 1) {
                    a = i;
                    b = j;
                    return true;
                }
        return false;
    }

    void complete(std::uint64_t& examined) {
        ++examined;
        Complex2 K = Complex2::from_triangles(n, chosen);
        if (!uses_all_vertices(K) || !K.is_connected()) return;
        SurfaceReport rep = classify_surface(K);
        if (!rep.is_closed_surface) return;
        if (chi && rep.euler_characteristic != *chi) return;
        if (orientable && rep.orientable != *orientable) return;
        CanonicalComplex cf = canonical_form(K);
        std::lock_guard<std::mutex> lock(*out_mtx);
        out->classes.emplace(cf.key(), cf.complex);
    }

    void dfs(std::uint64_t& examined) {
        VertexId a, b;
        if (!deficient_edge(a, b)) {
            if (!chosen.empty()) complete(examined);
            return;
        }
        if (static_cast<int>(chosen.size()) >= max_triangles) return;
        // The deficient edge must be completed by a second triangle.
        int branch_idx = 0;
        for (VertexId c = 0; c < n; ++c) {
            if (c == a || c == b) continue;
            Triangle t(a, b, c);
            if (std::binary_search(chosen.begin(), chosen.end(), t)) continue;
            if (!can_add(t)) continue;
            if (depth == 0 && branch_filter >= 0 && branch_idx++ != branch_filter) continue;
            if (depth == 0 && branch_filter < 0) ++branch_idx;
            auto pos = std::lower_bound(chosen.begin(), chosen.end(), t);
            chosen.insert(pos, t);
            add(t, 1);
            ++depth;
            dfs(examined);
            --depth;
            add(t, -1);
            chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), t));
        }
    }
};

LevelResult enumerate_surface_level(int n, const EnumerationConstraints& c, int threads) {
    LevelResult result;
    if (n < 4) {
        result.examined = 0;
        return result; // no closed surface on fewer than 4 vertices
    }
    std::mutex mtx;

    // Every isomorphism class has a labeling containing the triangle
    // {0,1,2}; dedup by canonical form handles the rest.
    auto run_branch = [&](int branch) -> std::uint64_t {
        SurfaceSearch s(n);
        s.chi = c.euler_characteristic;
        s.orientable = c.orientable;
        s.set_budget();
        s.out = &result;
        s.out_mtx = &mtx;
        s.branch_filter = branch;
        Triangle seed(0, 1, 2);
        s.chosen.push_back(seed);
        s.add(seed, 1);
        std::uint64_t examined = 0;
        s.dfs(examined);
        return examined;
    };

    if (threads <= 1) {
        result.examined = run_branch(-1);
    } else {
        // First-level branches are the candidate completions of the edge
        // {0,1}; there are at most n-2 of them.
        std::atomic<int> next{0};
        std::atomic<std::uint64_t> examined{0};
        auto worker = [&]() {
            for (;;) {
                int b = next.fetch_add(1);
                if (b >= n - 2) break;
                examined += run_branch(b);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        result.examined = examined;
    }

    if (c.post_filter) {
        for (auto it = result.classes.begin(); it != result.classes.end();)
            it = c.post_filter(it->second) ? std::next(it) : result.classes.erase(it);
    }
    return result;
}

} // namespace

std::vector<Complex2> enumerate_complexes(const EnumerationConstraints& c, int threads) {
    if (c.max_vertices > c.hard_cap && !c.acknowledge_large)
        throw std::invalid_argument("vertex cap exceeded; set acknowledge_large to override");
    if (c.max_vertices < 1) throw std::invalid_argument("need at least one vertex");
    if (!c.require_connected)
        throw std::invalid_argument("only connected enumeration is implemented; disconnected "
                                    "complexes factor through their components");

    std::vector<Complex2> out;
    for (int n = 1; n <= c.max_vertices; ++n) {
        LevelResult level = c.require_closed_surface ? enumerate_surface_level(n, c, threads)
                                                     : enumerate_general_level(n, c, threads);
        for (auto& [key, K] : level.classes) out.push_back(std::move(K));
    }
    return out;
}

Freeness freeness_screen(const Complex2& K) {
    if (!K.is_connected()) throw std::invalid_argument("freeness screen needs a connected complex");
    if (K.triangles().empty()) return Freeness::Free;
    if (is_collapsible_to_graph(K)) return Freeness::Free;
    HomologyProfile h = homology(K);
    if (!h.h1_torsion.empty()) return Freeness::NonFree;
    Presentation P = tietze_simplify(edge_path_presentation(K), 4000);
    if (P.relators.empty()) return Freeness::Free;
    return Freeness::Undecided;
}

std::vector<std::string> known_certification_properties() {
    return {"h1-torsion", "nonfree", "closed-surface", "closed-orientable-chi0",
            "closed-orientable-chi-minus2"};
}

namespace {

// Witness scan over pure triangle closures on exactly n vertices, smallest
// triangle count first, stopping at the first hit.  Sound for properties
// that are insensitive to stray edges (torsion is: extra edges only add
// free rank).
std::optional<Complex2> scan_pure_closures(int n, std::uint64_t& examined,
                                           const std::function<bool(const Complex2&)>& pred) {
    std::vector<Triangle> triples = all_triples(n);
    const int nt = static_cast<int>(triples.size());
    for (int count = 1; count <= nt; ++count) {
        std::vector<int> idx(count);
        for (int i = 0; i < count; ++i) idx[i] = i;
        for (;;) {
            std::vector<Triangle> chosen;
            for (int i : idx) chosen.push_back(triples[i]);
            Complex2 K = Complex2::from_triangles(n, chosen);
            ++examined;
            if (uses_all_vertices(K) && K.is_connected() && pred(K)) return K;
            // next combination
            int i = count - 1;
            while (i >= 0 && idx[i] == nt - count + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < count; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace

CertResult certify_min_vertices(const std::string& property, int n_start, int n_max,
                                int threads, bool acknowledge_large) {
    if (n_max > 8 && !acknowledge_large)
        throw std::invalid_argument("vertex cap exceeded; pass the acknowledgment flag");
    CertResult res;
    res.property = property;
    res.exhaustively_checked_below = true;

    auto torsion_pred = [](const Complex2& K) { return !homology(K).h1_torsion.empty(); };

    if (property == "h1-torsion" || property == "nonfree") {
        for (int n = n_start; n <= n_max; ++n) {
            if (n <= 5) {
                EnumerationConstraints c;
                c.max_vertices = n;
                LevelResult level = enumerate_general_level(n, c, threads);
                res.complexes_examined += level.examined;
                for (const auto& [key, K] : level.classes) {
                    if (property == "h1-torsion") {
                        if (torsion_pred(K)) {
                            res.minimal_vertex_count = n;
                            res.witness = K;
                            return res;
                        }
                    } else {
                        Freeness f = freeness_screen(K);
                        if (f == Freeness::NonFree) {
                            res.minimal_vertex_count = n;
                            res.witness = K;
                            return res;
                        }
                        if (f == Freeness::Undecided) {
                            res.undecided.push_back(K);
                            res.exhaustively_checked_below = false;
                        }
                    }
                }
            } else {
                // Witness scan: exhaustive levels end at 5, above that the
                // first hit in deterministic order is reported.
                auto pred = property == "h1-torsion"
                                ? std::function<bool(const Complex2&)>(torsion_pred)
                                : std::function<bool(const Complex2&)>([](const Complex2& K) {
                                      return freeness_screen(K) == Freeness::NonFree;
                                  });
                std::optional<Complex2> w = scan_pure_closures(n, res.complexes_examined, pred);
                if (w) {
                    res.minimal_vertex_count = n;
                    res.witness = *w;
                    return res;
                }
            }
        }
        return res;
    }

    EnumerationConstraints c;
    c.require_closed_surface = true;
    if (property == "closed-orientable-chi0") {
        c.euler_characteristic = 0;
        c.orientable = true;
    } else if (property == "closed-orientable-chi-minus2") {
        c.euler_characteristic = -2;
        c.orientable = true;
    } else if (property != "closed-surface") {
        throw std::invalid_argument("unknown certification property: " + property);
    }

    for (int n = n_start; n <= n_max; ++n) {
        LevelResult level = enumerate_surface_level(n, c, threads);
        res.complexes_examined += level.examined;
        if (!level.classes.empty()) {
            res.minimal_vertex_count = n;
            res.witness = level.classes.begin()->second;
            return res;
        }
    }
    return res;
}

} // namespace kw
