#include "kw/glue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kw {

namespace {

std::string vert_pair(VertexId a, VertexId b) {
    std::ostringstream os;
    os << "{" << a << "," << b << "}";
    return os.str();
}

std::string simplex_str(const std::vector<VertexId>& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

} // namespace

void validate_embedding(const Embedding& e, const Complex2& target) {
    const int nz = e.source.vertex_count();
    if (static_cast<int>(e.vertex_map.size()) != nz)
        throw std::invalid_argument("embedding map size differs from source vertex count");
    std::set<VertexId> image;
    for (VertexId w : e.vertex_map) {
        if (w < 0 || w >= target.vertex_count())
            throw std::invalid_argument("embedding maps a vertex outside the target");
        if (!image.insert(w).second)
            throw std::invalid_argument("embedding is not injective");
    }
    for (const auto& ed : e.source.edges())
        if (!target.has_edge(e.vertex_map[ed.v[0]], e.vertex_map[ed.v[1]]))
            throw std::invalid_argument("embedding does not carry edge " +
                                        vert_pair(ed.v[0], ed.v[1]) + " onto a target edge");
    for (const auto& t : e.source.triangles())
        if (!target.has_triangle(e.vertex_map[t.v[0]], e.vertex_map[t.v[1]],
                                 e.vertex_map[t.v[2]]))
            throw std::invalid_argument("embedding does not carry a source triangle onto a target triangle");
}

bool is_maximal(const Embedding& e, const Complex2& target) {
    validate_embedding(e, target);
    std::vector<int> preimage(target.vertex_count(), -1);
    for (int z = 0; z < e.source.vertex_count(); ++z) preimage[e.vertex_map[z]] = z;

    for (const auto& t : target.triangles()) {
        int a = preimage[t.v[0]], b = preimage[t.v[1]], c = preimage[t.v[2]];
        if (a < 0 || b < 0 || c < 0) continue;
        // 1-skeleton of the triangle inside the image?
        if (!e.source.has_edge(a, b) || !e.source.has_edge(a, c) || !e.source.has_edge(b, c))
            continue;
        if (!e.source.has_triangle(a, b, c)) return false;
    }
    return true;
}

GlueResult glue(const Complex2& X, const Complex2& Y, const Embedding& iZ, const Embedding& jZ) {
    if (!(iZ.source == jZ.source))
        throw std::invalid_argument("the two embeddings must share one source complex");
    validate_embedding(iZ, X);
    validate_embedding(jZ, Y);
    const Complex2& Z = iZ.source;
    const int nz = Z.vertex_count();

    GlueResult res;
    res.x_map.resize(X.vertex_count());
    std::iota(res.x_map.begin(), res.x_map.end(), 0);

    // Y vertices in the image of jZ land on their X partners; the rest are
    // appended in ascending order.
    std::vector<int> y_pre(Y.vertex_count(), -1);
    for (int z = 0; z < nz; ++z) y_pre[jZ.vertex_map[z]] = z;
    res.y_map.assign(Y.vertex_count(), -1);
    VertexId next = X.vertex_count();
    for (VertexId y = 0; y < Y.vertex_count(); ++y)
        res.y_map[y] = y_pre[y] >= 0 ? iZ.vertex_map[y_pre[y]] : next++;
    const int nw = next;

    // Condition (1): at most one edge between any two Z-vertices in W.  A
    // violation is an X edge and a Y edge landing on the same vertex pair
    // without a Z edge identifying them.
    res.lemma22_condition1 = true;
    std::ostringstream cond1_diag;
    for (int u = 0; u < nz && res.lemma22_condition1; ++u)
        for (int v = u + 1; v < nz; ++v) {
            if (Z.has_edge(u, v)) continue;
            bool in_x = X.has_edge(iZ.vertex_map[u], iZ.vertex_map[v]);
            bool in_y = Y.has_edge(jZ.vertex_map[u], jZ.vertex_map[v]);
            if (in_x && in_y) {
                res.lemma22_condition1 = false;
                cond1_diag << "condition (1) violated: two distinct edges join the glued vertices "
                           << iZ.vertex_map[u] << "=" << jZ.vertex_map[u] << " and "
                           << iZ.vertex_map[v] << "=" << jZ.vertex_map[v] << " (x-edge "
                           << vert_pair(iZ.vertex_map[u], iZ.vertex_map[v]) << ", y-edge "
                           << vert_pair(jZ.vertex_map[u], jZ.vertex_map[v]) << ")";
                break;
            }
        }
    if (!res.lemma22_condition1) throw GlueError(cond1_diag.str());

    res.lemma22_condition2 = is_maximal(iZ, X) || is_maximal(jZ, Y);

    if (!res.lemma22_condition2) {
        direct_validate_gluing(X, Y, iZ, jZ);
        res.directly_validated = true;
    }

    std::vector<Edge> edges;
    for (const auto& e : X.edges()) edges.push_back(e);
    for (const auto& e : Y.edges()) edges.emplace_back(res.y_map[e.v[0]], res.y_map[e.v[1]]);
    std::vector<Triangle> tris;
    for (const auto& t : X.triangles()) tris.push_back(t);
    for (const auto& t : Y.triangles())
        tris.emplace_back(res.y_map[t.v[0]], res.y_map[t.v[1]], res.y_map[t.v[2]]);
    res.complex = Complex2::make(nw, std::move(edges), std::move(tris));
    return res;
}

void direct_validate_gluing(const Complex2& X, const Complex2& Y, const Embedding& iZ,
                            const Embedding& jZ) {
    const Complex2& Z = iZ.source;
    const int nz = Z.vertex_count();
    std::vector<int> x_pre(X.vertex_count(), -1), y_pre(Y.vertex_count(), -1);
    for (int z = 0; z < nz; ++z) {
        x_pre[iZ.vertex_map[z]] = z;
        y_pre[jZ.vertex_map[z]] = z;
    }

    auto z_image_edge = [&](const Edge& e, const std::vector<int>& pre) {
        int a = pre[e.v[0]], b = pre[e.v[1]];
        return a >= 0 && b >= 0 && Z.has_edge(a, b);
    };
    auto z_image_tri = [&](const Triangle& t, const std::vector<int>& pre) {
        int a = pre[t.v[0]], b = pre[t.v[1]], c = pre[t.v[2]];
        return a >= 0 && b >= 0 && c >= 0 && Z.has_triangle(a, b, c);
    };

    // Simplices outside the image of Z, recorded by the Z-coordinates of
    // those of their vertices that lie in Z.  Only Z-vertices can be shared
    // between the two sides.
    struct OpenSimplex {
        std::vector<int> z;
        std::vector<VertexId> w; // original labels, for diagnostics
    };
    auto collect = [&](const Complex2& C, const std::vector<int>& pre) {
        std::vector<OpenSimplex> out;
        auto z_verts = [&](std::initializer_list<VertexId> verts) {
            std::vector<int> zz;
            for (VertexId v : verts)
                if (pre[v] >= 0) zz.push_back(pre[v]);
            return zz;
        };
        for (const auto& e : C.edges())
            if (!z_image_edge(e, pre))
                out.push_back({z_verts({e.v[0], e.v[1]}), {e.v[0], e.v[1]}});
        for (const auto& t : C.triangles())
            if (!z_image_tri(t, pre))
                out.push_back({z_verts({t.v[0], t.v[1], t.v[2]}), {t.v[0], t.v[1], t.v[2]}});
        return out;
    };
    std::vector<OpenSimplex> open_x = collect(X, x_pre), open_y = collect(Y, y_pre);

    for (const auto& sx : open_x)
        for (const auto& sy : open_y) {
            std::vector<int> common;
            for (int a : sx.z)
                for (int b : sy.z)
                    if (a == b) common.push_back(a);
            if (common.size() < 2) continue; // a vertex or nothing is always a face
            bool ok = common.size() == 2 ? Z.has_edge(common[0], common[1])
                                         : Z.has_triangle(common[0], common[1], common[2]);
            if (!ok)
                throw GlueError("non-simplex intersection: x-simplex " + simplex_str(sx.w) +
                                " and y-simplex " + simplex_str(sy.w) + " meet outside Z");
        }
}

namespace {

struct MergeFind {
    std::vector<int> parent;
    explicit MergeFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

GlueResult identify_curves(const Complex2& K, const std::vector<VertexId>& c1,
                           const std::vector<VertexId>& c2) {
    if (c1.size() != c2.size())
        throw std::invalid_argument("curves must have equal simplicial length");
    if (c1.size() < 3) throw std::invalid_argument("a closed edge path needs at least 3 vertices");
    auto check_curve = [&](const std::vector<VertexId>& c, const char* name) {
        std::set<VertexId> seen;
        for (size_t i = 0; i < c.size(); ++i) {
            VertexId a = c[i], b = c[(i + 1) % c.size()];
            if (a < 0 || a >= K.vertex_count())
                throw std::invalid_argument(std::string(name) + " leaves the complex");
            if (!seen.insert(a).second)
                throw std::invalid_argument(std::string(name) +
                                            " is not simple: vertex visited twice");
            if (!K.has_edge(a, b))
                throw std::invalid_argument(std::string(name) + " uses missing edge " +
                                            vert_pair(a, b));
        }
    };
    check_curve(c1, "curve c1");
    check_curve(c2, "curve c2");

    MergeFind mf(K.vertex_count());
    for (size_t i = 0; i < c1.size(); ++i) mf.unite(c1[i], c2[i]);

    // Dense new ids ordered by class representative.
    std::map<int, VertexId> id_of_root;
    GlueResult res;
    res.x_map.assign(K.vertex_count(), -1);
    VertexId next = 0;
    for (VertexId v = 0; v < K.vertex_count(); ++v) {
        int r = mf.find(v);
        auto it = id_of_root.find(r);
        if (it == id_of_root.end()) it = id_of_root.emplace(r, next++).first;
        res.x_map[v] = it->second;
    }
    res.y_map = res.x_map;

    // The curve edges identified with each other are the only legal
    // collisions; everything else colliding is a duplicate simplex.
    std::set<std::pair<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>>> allowed;
    auto norm = [](VertexId a, VertexId b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (size_t i = 0; i < c1.size(); ++i) {
        auto e1 = norm(c1[i], c1[(i + 1) % c1.size()]);
        auto e2 = norm(c2[i], c2[(i + 1) % c2.size()]);
        if (e1 > e2) std::swap(e1, e2);
        allowed.insert({e1, e2});
    }

    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<VertexId, VertexId>>> edge_images;
    for (const auto& e : K.edges()) {
        VertexId a = res.x_map[e.v[0]], b = res.x_map[e.v[1]];
        if (a == b)
            throw GlueError("edge " + vert_pair(e.v[0], e.v[1]) +
                            " collapses: its endpoints are identified");
        edge_images[norm(a, b)].push_back(norm(e.v[0], e.v[1]));
    }
    for (auto& [img, sources] : edge_images) {
        if (sources.size() == 1) continue;
        if (sources.size() == 2) {
            auto pr = std::make_pair(std::min(sources[0], sources[1]),
                                     std::max(sources[0], sources[1]));
            if (allowed.count(pr)) continue;
        }
        throw GlueError("duplicate edge after identification: edges " +
                        vert_pair(sources[0].first, sources[0].second) + " and " +
                        vert_pair(sources[1].first, sources[1].second) +
                        " both land on " + vert_pair(img.first, img.second));
    }

    std::map<std::array<VertexId, 3>, std::array<VertexId, 3>> tri_images;
    for (const auto& t : K.triangles()) {
        std::array<VertexId, 3> img{res.x_map[t.v[0]], res.x_map[t.v[1]], res.x_map[t.v[2]]};
        std::sort(img.begin(), img.end());
        if (img[0] == img[1] || img[1] == img[2])
            throw GlueError("triangle {" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) +
                            "," + std::to_string(t.v[2]) + "} degenerates under the identification");
        auto [it, fresh] = tri_images.emplace(img, t.v);
        if (!fresh)
            throw GlueError("duplicate triangle after identification: {" +
                            std::to_string(it->second[0]) + "," + std::to_string(it->second[1]) +
                            "," + std::to_string(it->second[2]) + "} and {" +
                            std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
                            std::to_string(t.v[2]) + "} coincide");
    }

    std::vector<Edge> edges;
    for (const auto& [img, srcs] : edge_images) edges.emplace_back(img.first, img.second);
    std::vector<Triangle> tris;
    for (const auto& [img, src] : tri_images) tris.emplace_back(img[0], img[1], img[2]);
    res.complex = Complex2::make(next, std::move(edges), std::move(tris));
    res.directly_validated = true;
    return res;
}

} // namespace kw
