#ifndef KW_COMPLEX_HPP
#define KW_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace kw {

using VertexId = std::int32_t;

// Undirected edge, endpoints kept sorted so that a vertex pair has a
// unique representation (at most one edge per pair by construction).
struct Edge {
    std::array<VertexId, 2> v;

    Edge() : v{0, 0} {}
    Edge(VertexId a, VertexId b);

    bool operator==(const Edge& o) const { return v == o.v; }
    bool operator<(const Edge& o) const { return v < o.v; }
    bool contains(VertexId x) const { return v[0] == x || v[1] == x; }
    VertexId other(VertexId x) const { return v[0] == x ? v[1] : v[0]; }
};

// Unordered triple of distinct vertices, kept sorted.
struct Triangle {
    std::array<VertexId, 3> v;

    Triangle() : v{0, 0, 0} {}
    Triangle(VertexId a, VertexId b, VertexId c);

    bool operator==(const Triangle& o) const { return v == o.v; }
    bool operator<(const Triangle& o) const { return v < o.v; }
    bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }
    std::array<Edge, 3> edges() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool connected = true;

    bool valid() const { return violations.empty(); }
};

// A finite simplicial complex of dimension <= 2.  Vertex ids are dense in
// [0, n_vertices).  Edge and triangle sets are sorted and duplicate-free;
// instances are immutable after construction and safe to share across
// threads.
class Complex2 {
  public:
    Complex2() = default;

    // Sorts, deduplicates and (optionally) completes the downward closure.
    // Without close_down the missing faces are left for validate() to
    // report.
    static Complex2 make(int n_vertices, std::vector<Edge> edges,
                         std::vector<Triangle> triangles, bool close_down = false);

    // Closure of a triangle list: edges derived from the triangles.
    static Complex2 from_triangles(int n_vertices, std::vector<Triangle> triangles);

    static Complex2 single_vertex();

    int vertex_count() const { return n_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    int edge_count() const { return static_cast<int>(edges_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }

    bool has_edge(VertexId a, VertexId b) const;
    bool has_triangle(VertexId a, VertexId b, VertexId c) const;

    // Index into edges() for a present pair, -1 otherwise.
    int edge_index(VertexId a, VertexId b) const;

    // Triangles incident to the edge {a,b}.
    std::vector<Triangle> triangles_on_edge(VertexId a, VertexId b) const;

    // Adjacency in the 1-skeleton, in increasing order.
    std::vector<VertexId> neighbors(VertexId v) const;

    int euler_characteristic() const;

    bool is_connected() const;

    bool operator==(const Complex2& o) const {
        return n_vertices_ == o.n_vertices_ && edges_ == o.edges_ && triangles_ == o.triangles_;
    }

  private:
    int n_vertices_ = 0;
    std::vector<Edge> edges_;        // sorted, unique
    std::vector<Triangle> triangles_; // sorted, unique
};

// Reports every violated closure/duplicate/range condition plus 1-skeleton
// connectivity.  Never throws: invalid complexes are described, not
// rejected.
ValidationReport validate(const Complex2& K);

// Closed star of v: all simplices containing v plus their faces, relabeled
// densely.  The relabeling keeps the original vertex order.
Complex2 star(const Complex2& K, VertexId v);

// Link of v: faces of the star simplices that do not contain v.
Complex2 link(const Complex2& K, VertexId v);

// true when K is a single cycle: connected, every vertex of degree 2, no
// triangles.
bool is_single_cycle(const Complex2& K);

struct SurfaceReport {
    bool is_closed_surface = false;
    bool orientable = false;   // meaningful only when is_closed_surface
    int euler_characteristic = 0;
    int genus = -1;            // orientable genus g, or crosscap number q; -1 when not a surface

    bool has_genus() const { return genus >= 0; }
};

// Closed-surface recognition: every edge in exactly two triangles and every
// vertex link a single cycle.  Orientability by propagating triangle
// orientations across shared edges; genus from the Euler characteristic.
SurfaceReport classify_surface(const Complex2& K);

// 2-skeleton of the nerve of the open-star cover {St(v)}.  One nerve vertex
// per vertex of K; a simplex appears whenever the corresponding stars have a
// common point.
Complex2 star_cover_nerve(const Complex2& K);

} // namespace kw

#endif
