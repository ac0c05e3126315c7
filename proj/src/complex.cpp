#include "kw/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kw {

Edge::Edge(VertexId a, VertexId b) : v{a, b} {
    if (a == b) throw std::invalid_argument("edge endpoints must be distinct");
    if (v[0] > v[1]) std::swap(v[0], v[1]);
}

Triangle::Triangle(VertexId a, VertexId b, VertexId c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
        throw std::invalid_argument("triangle corners must be pairwise distinct");
}

std::array<Edge, 3> Triangle::edges() const {
    return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
}

Complex2 Complex2::make(int n_vertices, std::vector<Edge> edges,
                        std::vector<Triangle> triangles, bool close_down) {
    if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
    if (close_down) {
        for (const auto& t : triangles)
            for (const auto& e : t.edges()) edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(triangles.begin(), triangles.end());
    triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());

    Complex2 K;
    K.n_vertices_ = n_vertices;
    K.edges_ = std::move(edges);
    K.triangles_ = std::move(triangles);
    return K;
}

Complex2 Complex2::from_triangles(int n_vertices, std::vector<Triangle> triangles) {
    return make(n_vertices, {}, std::move(triangles), true);
}

Complex2 Complex2::single_vertex() { return make(1, {}, {}); }

bool Complex2::has_edge(VertexId a, VertexId b) const { return edge_index(a, b) >= 0; }

int Complex2::edge_index(VertexId a, VertexId b) const {
    if (a == b) return -1;
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

bool Complex2::has_triangle(VertexId a, VertexId b, VertexId c) const {
    Triangle t(a, b, c);
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

std::vector<Triangle> Complex2::triangles_on_edge(VertexId a, VertexId b) const {
    std::vector<Triangle> out;
    for (const auto& t : triangles_)
        if (t.contains(a) && t.contains(b)) out.push_back(t);
    return out;
}

std::vector<VertexId> Complex2::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& e : edges_)
        if (e.contains(v)) out.push_back(e.other(v));
    std::sort(out.begin(), out.end());
    return out;
}

int Complex2::euler_characteristic() const {
    return n_vertices_ - edge_count() + triangle_count();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        std::set<int> roots;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) roots.insert(find(i));
        return static_cast<int>(roots.size());
    }
};

} // namespace

bool Complex2::is_connected() const {
    if (n_vertices_ <= 1) return true;
    UnionFind uf(n_vertices_);
    for (const auto& e : edges_) uf.unite(e.v[0], e.v[1]);
    return uf.components() == 1;
}

ValidationReport validate(const Complex2& K) {
    ValidationReport rep;
    const int n = K.vertex_count();

    for (const auto& e : K.edges()) {
        if (e.v[0] < 0 || e.v[1] >= n)
            rep.violations.push_back("edge {" + std::to_string(e.v[0]) + "," +
                                     std::to_string(e.v[1]) + "} references a vertex outside [0," +
                                     std::to_string(n) + ")");
    }
    for (const auto& t : K.triangles()) {
        if (t.v[0] < 0 || t.v[2] >= n) {
            rep.violations.push_back("triangle {" + std::to_string(t.v[0]) + "," +
                                     std::to_string(t.v[1]) + "," + std::to_string(t.v[2]) +
                                     "} references a vertex outside [0," + std::to_string(n) + ")");
            continue;
        }
        for (const auto& e : t.edges()) {
            if (!K.has_edge(e.v[0], e.v[1]))
                rep.violations.push_back("closure violation: edge {" + std::to_string(e.v[0]) +
                                         "," + std::to_string(e.v[1]) + "} of triangle {" +
                                         std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) +
                                         "," + std::to_string(t.v[2]) + "} is missing");
        }
    }
    rep.connected = K.is_connected();
    return rep;
}

Complex2 star(const Complex2& K, VertexId v) {
    if (v < 0 || v >= K.vertex_count()) throw std::invalid_argument("vertex not in complex");
    std::set<VertexId> verts{v};
    std::vector<Edge> edges;
    std::vector<Triangle> tris;
    for (const auto& t : K.triangles())
        if (t.contains(v)) {
            tris.push_back(t);
            for (VertexId x : t.v) verts.insert(x);
        }
    for (const auto& e : K.edges())
        if (e.contains(v)) {
            edges.push_back(e);
            verts.insert(e.other(v));
        }
    // Relabel densely, preserving order.
    std::map<VertexId, VertexId> relabel;
    VertexId next = 0;
    for (VertexId x : verts) relabel[x] = next++;
    std::vector<Edge> redges;
    for (const auto& e : edges) redges.emplace_back(relabel[e.v[0]], relabel[e.v[1]]);
    std::vector<Triangle> rtris;
    for (const auto& t : tris) rtris.emplace_back(relabel[t.v[0]], relabel[t.v[1]], relabel[t.v[2]]);
    return Complex2::make(next, std::move(redges), std::move(rtris), true);
}

Complex2 link(const Complex2& K, VertexId v) {
    if (v < 0 || v >= K.vertex_count()) throw std::invalid_argument("vertex not in complex");
    std::set<VertexId> verts;
    std::vector<Edge> edges;
    for (const auto& t : K.triangles())
        if (t.contains(v)) {
            VertexId a = -1, b = -1;
            for (VertexId x : t.v)
                if (x != v) (a < 0 ? a : b) = x;
            edges.emplace_back(a, b);
            verts.insert(a);
            verts.insert(b);
        }
    for (const auto& e : K.edges())
        if (e.contains(v)) verts.insert(e.other(v));
    std::map<VertexId, VertexId> relabel;
    VertexId next = 0;
    for (VertexId x : verts) relabel[x] = next++;
    std::vector<Edge> redges;
    for (const auto& e : edges) redges.emplace_back(relabel[e.v[0]], relabel[e.v[1]]);
    return Complex2::make(next, std::move(redges), {});
}

bool is_single_cycle(const Complex2& K) {
    if (!K.triangles().empty()) return false;
    if (K.vertex_count() < 3) return false;
    if (K.edge_count() != K.vertex_count()) return false;
    std::vector<int> deg(K.vertex_count(), 0);
    for (const auto& e : K.edges()) {
        ++deg[e.v[0]];
        ++deg[e.v[1]];
    }
    for (int d : deg)
        if (d != 2) return false;
    return K.is_connected();
}

SurfaceReport classify_surface(const Complex2& K) {
    SurfaceReport rep;
    rep.euler_characteristic = K.euler_characteristic();

    if (K.vertex_count() == 0 || K.triangles().empty()) return rep;

    // Every edge in exactly two triangles.
    std::vector<int> edge_deg(K.edges().size(), 0);
    std::vector<std::array<int, 2>> edge_tris(K.edges().size(), {-1, -1});
    for (int ti = 0; ti < K.triangle_count(); ++ti) {
        for (const auto& e : K.triangles()[ti].edges()) {
            int ei = K.edge_index(e.v[0], e.v[1]);
            if (ei < 0) return rep; // not even closed downward
            if (edge_deg[ei] < 2) edge_tris[ei][edge_deg[ei]] = ti;
            ++edge_deg[ei];
        }
    }
    for (int d : edge_deg)
        if (d != 2) return rep;

    // Every vertex link a single cycle.
    for (VertexId v = 0; v < K.vertex_count(); ++v)
        if (!is_single_cycle(link(K, v))) return rep;

    if (!K.is_connected()) return rep;

    rep.is_closed_surface = true;

    // Orientability: orient each triangle and propagate across edges; two
    // adjacent triangles are coherent when they induce opposite directions
    // on the shared edge.
    const auto& tris = K.triangles();
    std::vector<int> orient(tris.size(), 0);
    std::vector<int> stack;
    bool orientable = true;
    orient[0] = 1;
    stack.push_back(0);
    auto edge_dir = [](const Triangle& t, VertexId a, VertexId b) {
        // +1 if a->b matches the cyclic order v0->v1->v2->v0 of the sorted triple
        std::array<std::pair<VertexId, VertexId>, 3> cyc = {
            std::make_pair(t.v[0], t.v[1]), std::make_pair(t.v[1], t.v[2]),
            std::make_pair(t.v[2], t.v[0])};
        for (auto& [x, y] : cyc) {
            if (x == a && y == b) return 1;
            if (x == b && y == a) return -1;
        }
        return 0;
    };
    while (!stack.empty() && orientable) {
        int ti = stack.back();
        stack.pop_back();
        for (const auto& e : tris[ti].edges()) {
            int ei = K.edge_index(e.v[0], e.v[1]);
            int tj = edge_tris[ei][0] == ti ? edge_tris[ei][1] : edge_tris[ei][0];
            int di = edge_dir(tris[ti], e.v[0], e.v[1]);
            int dj = edge_dir(tris[tj], e.v[0], e.v[1]);
            // coherent orientations traverse the shared edge oppositely
            int needed = -orient[ti] * di * dj;
            if (orient[tj] == 0) {
                orient[tj] = needed;
                stack.push_back(tj);
            } else if (orient[tj] != needed) {
                orientable = false;
                break;
            }
        }
    }
    rep.orientable = orientable;
    const int chi = rep.euler_characteristic;
    rep.genus = orientable ? (2 - chi) / 2 : (2 - chi);
    return rep;
}

Complex2 star_cover_nerve(const Complex2& K) {
    // Open stars St(u), St(v) intersect exactly when some simplex contains
    // both u and v; a triple intersection needs a simplex containing all
    // three.  In a 2-complex that means: nerve edges = edges of K, nerve
    // triangles = triangles of K.  Computed from the definition rather than
    // assumed.
    const int n = K.vertex_count();
    std::vector<Edge> nerve_edges;
    std::vector<Triangle> nerve_tris;
    auto share_simplex = [&](VertexId a, VertexId b) {
        if (K.has_edge(a, b)) return true;
        for (const auto& t : K.triangles())
            if (t.contains(a) && t.contains(b)) return true;
        return false;
    };
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (share_simplex(a, b)) nerve_edges.emplace_back(a, b);
    for (const auto& t : K.triangles()) nerve_tris.push_back(t);
    std::sort(nerve_tris.begin(), nerve_tris.end());
    nerve_tris.erase(std::unique(nerve_tris.begin(), nerve_tris.end()), nerve_tris.end());
    return Complex2::make(n, std::move(nerve_edges), std::move(nerve_tris));
}

} // namespace kw
