#include <algorithm>
#include <set>
#include <stdexcept>

#include "kw/constructions.hpp"
#include "kw/glue.hpp"
#include "kw/homology.hpp"

namespace kw {

namespace {

// Incremental assembly with collision checking.  Adding a triangle requires
// its edges to be present already and the triple to be new; a new edge must
// not silently coincide with an existing one.  Collisions here mean the
// attempted quotient is not simplicial.
class Assembler {
  public:
    explicit Assembler(const Complex2& base)
        : n_(base.vertex_count()),
          edges_(base.edges().begin(), base.edges().end()),
          tris_(base.triangles().begin(), base.triangles().end()) {}

    VertexId add_vertex() { return n_++; }

    void edge(VertexId a, VertexId b, bool allow_existing = false) {
        Edge e(a, b);
        if (edges_.count(e)) {
            if (!allow_existing)
                throw std::logic_error("assembly collision: edge {" + std::to_string(a) + "," +
                                       std::to_string(b) + "} already present");
            return;
        }
        edges_.insert(e);
    }

    void tri(VertexId a, VertexId b, VertexId c) {
        Triangle t(a, b, c);
        for (const auto& e : t.edges())
            if (!edges_.count(e))
                throw std::logic_error("assembly: triangle added before its edge {" +
                                       std::to_string(e.v[0]) + "," + std::to_string(e.v[1]) + "}");
        if (!tris_.insert(t).second)
            throw std::logic_error("assembly collision: triangle {" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) +
                                   "} already present");
    }

    Complex2 finish() const {
        return Complex2::make(n_, std::vector<Edge>(edges_.begin(), edges_.end()),
                              std::vector<Triangle>(tris_.begin(), tris_.end()));
    }

  private:
    int n_;
    std::set<Edge> edges_;
    std::set<Triangle> tris_;
};

struct WindowDisk {
    std::vector<VertexId> t1;       // boundary cycle of the simplex at the base
    Triangle t1_triangle{0, 1, 2};
    std::vector<VertexId> boundary; // full boundary traversal, 3 steps per segment
    int interior_added = 0;
    // Per sector: the two triangles containing the base vertex.  lead[j] =
    // {p, m1_j, c_j}; which one is safe to remove and identify depends on
    // what the neighboring sectors trace.
    std::vector<Triangle> lead, trail;
};

// Triangulated disk attached along a closed path made of 3-edge segments
// p -> m1 -> m2 -> p.  One interior vertex per segment; a second one
// wherever adjacent segments trace the same circle in the same direction
// (the 5-triangle sections; everything else gets 4).  Cyclic reducedness of
// the segment word is exactly what keeps the quotient simplicial.
WindowDisk attach_window_disk(Assembler& A, VertexId p,
                              const std::vector<std::array<VertexId, 2>>& segs) {
    const int s = static_cast<int>(segs.size());
    WindowDisk out;
    for (const auto& seg : segs) {
        out.boundary.push_back(p);
        out.boundary.push_back(seg[0]);
        out.boundary.push_back(seg[1]);
    }
    if (s == 1) {
        A.tri(p, segs[0][0], segs[0][1]);
        out.t1 = {p, segs[0][0], segs[0][1]};
        out.t1_triangle = Triangle(p, segs[0][0], segs[0][1]);
        out.lead.push_back(out.t1_triangle);
        out.trail.push_back(out.t1_triangle);
        return out;
    }

    enum Type { kQuadLeft, kQuadRight, kFive };
    auto is_repeat_junction = [&](int j) { return segs[j] == segs[(j + s - 1) % s]; };
    std::vector<Type> type(s);
    for (int j = 0; j < s; ++j) {
        bool left = is_repeat_junction(j), right = is_repeat_junction((j + 1) % s);
        type[j] = left && right ? kFive : left ? kQuadRight : kQuadLeft;
    }

    std::vector<VertexId> c(s), d(s, -1);
    for (int j = 0; j < s; ++j) {
        c[j] = A.add_vertex();
        A.edge(p, c[j]);
        ++out.interior_added;
    }
    for (int j = 0; j < s; ++j)
        if (type[j] == kFive) {
            d[j] = A.add_vertex();
            ++out.interior_added;
        }

    // Inner ring: c_j, then d_j where present.
    std::vector<VertexId> ring;
    for (int j = 0; j < s; ++j) {
        ring.push_back(c[j]);
        if (d[j] >= 0) ring.push_back(d[j]);
    }
    const int R = static_cast<int>(ring.size());
    if (R == 2) {
        A.edge(ring[0], ring[1]);
    } else {
        for (int i = 0; i < R; ++i) A.edge(ring[i], ring[(i + 1) % R]);
    }

    for (int j = 0; j < s; ++j) {
        VertexId m1 = segs[j][0], m2 = segs[j][1];
        VertexId cj = c[j], cn = c[(j + 1) % s];
        switch (type[j]) {
            case kQuadLeft:
                A.edge(m1, cj);
                A.edge(m2, cj);
                A.edge(m2, cn);
                A.tri(p, m1, cj);
                A.tri(m1, m2, cj);
                A.tri(m2, cj, cn);
                A.tri(m2, p, cn);
                break;
            case kQuadRight:
                A.edge(m1, cj);
                A.edge(m1, cn);
                A.edge(m2, cn);
                A.tri(p, m1, cj);
                A.tri(m1, cj, cn);
                A.tri(m1, m2, cn);
                A.tri(m2, p, cn);
                break;
            case kFive:
                A.edge(m1, cj);
                A.edge(m1, d[j]);
                A.edge(m2, d[j]);
                A.edge(m2, cn);
                A.tri(p, m1, cj);
                A.tri(m1, cj, d[j]);
                A.tri(m1, m2, d[j]);
                A.tri(m2, d[j], cn);
                A.tri(m2, p, cn);
                break;
        }
    }

    if (R >= 3) {
        for (int i = 2; i + 1 < R; ++i) A.edge(ring[0], ring[i]);
        for (int i = 1; i + 1 < R; ++i) A.tri(ring[0], ring[i], ring[i + 1]);
    }

    for (int j = 0; j < s; ++j) {
        out.lead.emplace_back(p, segs[j][0], c[j]);
        out.trail.emplace_back(segs[j][1], p, c[(j + 1) % s]);
    }
    out.t1 = {p, segs[0][0], c[0]};
    out.t1_triangle = Triangle(p, segs[0][0], c[0]);
    return out;
}

// Band gluing orientation: the core is traversed 0 -> 3 -> 4 and the
// boundary 0 -> 2 -> 5; with these directions the boundary class is +2
// times the core class, which keeps every telescope doubling positive.
const std::vector<VertexId>& band_core_order() {
    static const std::vector<VertexId> k = {0, 3, 4};
    return k;
}
const std::vector<VertexId>& band_boundary_order() {
    static const std::vector<VertexId> k = {0, 2, 5};
    return k;
}

Complex2 triangle_circle() {
    return Complex2::make(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}, {});
}

// Glue one Moebius band, its core landing on `cycle`; returns the new
// boundary cycle in the coordinates of the result.
std::vector<VertexId> attach_band(Complex2& K, const std::vector<VertexId>& cycle) {
    Embedding iZ{triangle_circle(), {cycle[0], cycle[1], cycle[2]}};
    Embedding jZ{triangle_circle(),
                 {band_core_order()[0], band_core_order()[1], band_core_order()[2]}};
    GlueResult r = glue(K, moebius_band().complex, iZ, jZ);
    K = std::move(r.complex);
    return {r.y_map[band_boundary_order()[0]], r.y_map[band_boundary_order()[1]],
            r.y_map[band_boundary_order()[2]]};
}

long long floor_log2(long long m) {
    long long k = 0;
    while ((1LL << (k + 1)) <= m) ++k;
    return k;
}

std::vector<int> dyadic_digits(long long m) {
    std::vector<int> digits;
    for (int b = 0; (1LL << b) <= m; ++b)
        if (m & (1LL << b)) digits.push_back(b);
    return digits;
}

} // namespace

MarkedComplex word_disk_over(const Word& w, int n_generators) {
    if (!w.is_cyclically_reduced())
        throw std::invalid_argument("word disk needs a cyclically reduced word");
    if (w.length() < 2) throw std::invalid_argument("word disk needs length >= 2");
    for (const Letter& l : w.letters)
        if (l.gen < 0 || l.gen >= n_generators)
            throw std::invalid_argument("word uses a generator outside the bouquet");

    MarkedComplex mc = bouquet(n_generators);
    Assembler A(mc.complex);
    std::vector<std::array<VertexId, 2>> segs;
    for (const Letter& l : w.letters) {
        const auto& circ = mc.path("a" + std::to_string(l.gen + 1));
        if (l.sign > 0)
            segs.push_back({circ[1], circ[2]});
        else
            segs.push_back({circ[2], circ[1]});
    }
    WindowDisk d = attach_window_disk(A, mc.base_vertex, segs);
    mc.complex = A.finish();
    mc.marked_paths["boundary"] = d.boundary;
    mc.marked_paths["delta_p"] = d.t1;
    return mc;
}

MarkedComplex word_disk(const Word& w) {
    int n = 0;
    for (const Letter& l : w.letters) n = std::max(n, l.gen + 1);
    return word_disk_over(w, n);
}

MarkedComplex telescope(int k) {
    if (k < 1) throw std::invalid_argument("telescope length must be >= 1");
    MarkedComplex band = moebius_band();
    MarkedComplex mc;
    mc.complex = band.complex;
    mc.base_vertex = 0;
    mc.marked_paths["gamma0"] = band.path("core");
    std::vector<VertexId> bd = band.path("boundary");
    for (int b = 1; b < k; ++b) {
        mc.marked_paths["gamma" + std::to_string(b)] = bd;
        bd = attach_band(mc.complex, bd);
    }
    mc.marked_paths["boundary"] = bd;
    return mc;
}

std::vector<VertexId> dyadic_curve(long long m, const MarkedComplex& T) {
    if (m < 2) throw std::invalid_argument("dyadic curve needs m >= 2");
    const long long k = floor_log2(m);
    if (!T.has_path("gamma" + std::to_string(k - 1)) || T.has_path("gamma" + std::to_string(k)))
        throw std::invalid_argument("telescope length does not match m (need the least k with m < 2^{k+1})");
    std::vector<int> digits = dyadic_digits(m);
    std::vector<VertexId> path;
    for (size_t j = 0; j + 1 < digits.size(); ++j) {
        const auto& seg = T.path("gamma" + std::to_string(digits[j]));
        path.insert(path.end(), seg.begin(), seg.end());
    }
    const auto& bd = T.path("boundary");
    path.insert(path.end(), bd.begin(), bd.end());
    return path;
}

Complex2 cyclic_complex(long long m) {
    if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
    if (m == 1) return Complex2::single_vertex();
    const long long k = floor_log2(m);
    MarkedComplex T = telescope(static_cast<int>(k));
    std::vector<int> digits = dyadic_digits(m);
    std::vector<std::array<VertexId, 2>> segs;
    for (size_t j = 0; j + 1 < digits.size(); ++j) {
        const auto& g = T.path("gamma" + std::to_string(digits[j]));
        segs.push_back({g[1], g[2]});
    }
    const auto& bd = T.path("boundary");
    segs.push_back({bd[1], bd[2]});

    Assembler A(T.complex);
    if (segs.size() == 1) {
        A.tri(T.base_vertex, segs[0][0], segs[0][1]);
    } else {
        attach_window_disk(A, T.base_vertex, segs);
    }
    return A.finish();
}

namespace {

// One side of a power relation: word disk with the base 2-simplex removed,
// telescope of the right length, capping disk along the dyadic curve (with
// the generator circle wedged in for odd Artin relations), cap simplex at
// the base removed.  Returns the boundary cycle of that removed simplex.
struct SideSpec {
    Word w;
    long long power = 2;
    int extra_circle = -1; // generator index wedged into the cap curve, or -1
};

std::vector<VertexId> build_power_side(Complex2& K, const MarkedComplex& circles,
                                       const SideSpec& side) {
    const VertexId p = circles.base_vertex;

    // P'_w
    Assembler A(K);
    std::vector<std::array<VertexId, 2>> segs;
    for (const Letter& l : side.w.letters) {
        const auto& circ = circles.path("a" + std::to_string(l.gen + 1));
        if (l.sign > 0)
            segs.push_back({circ[1], circ[2]});
        else
            segs.push_back({circ[2], circ[1]});
    }
    WindowDisk disk = attach_window_disk(A, p, segs);
    K = remove_triangle(A.finish(), disk.t1_triangle);

    // Telescope over gamma_0 = the boundary of the removed simplex.
    const long long k = floor_log2(side.power);
    std::vector<std::vector<VertexId>> gamma{disk.t1};
    std::vector<VertexId> bd = disk.t1;
    for (long long b = 0; b < k; ++b) {
        bd = attach_band(K, bd);
        if (b + 1 < k) gamma.push_back(bd);
    }

    // Capping curve: dyadic pieces, then the boundary, then the wedged
    // generator circle when present.
    std::vector<int> digits = dyadic_digits(side.power);
    std::vector<std::array<VertexId, 2>> cap;
    for (size_t j = 0; j + 1 < digits.size(); ++j) {
        const auto& g = gamma[digits[j]];
        cap.push_back({g[1], g[2]});
    }
    cap.push_back({bd[1], bd[2]});
    if (side.extra_circle >= 0) {
        const auto& circ = circles.path("a" + std::to_string(side.extra_circle + 1));
        cap.push_back({circ[1], circ[2]});
    }

    if (cap.size() == 1) {
        // The cap would be a single triangle; removing its designated
        // simplex again leaves the complex as is, and the attaching cycle
        // is the telescope boundary itself.
        return bd;
    }

    if (k == 0)
        throw std::logic_error("power-1 sides need the plain-disk route");

    Assembler A2(K);
    WindowDisk capdisk = attach_window_disk(A2, p, cap);
    // Remove the leading base triangle of the telescope-boundary sector,
    // {p, bd[1], c}.  Its two non-base corners are telescope and cap
    // interior vertices whose only shared neighbor is the base itself, and
    // the base edges lie on the removed boundary; so identifying this
    // boundary with the matching one on the other side can never create a
    // duplicate simplex.
    const int jsafe = static_cast<int>(digits.size()) - 1;
    Triangle t1 = capdisk.lead[jsafe];
    K = remove_triangle(A2.finish(), t1);
    VertexId c = -1;
    for (VertexId v : t1.v)
        if (v != p && v != bd[1]) c = v;
    return {p, bd[1], c};
}

std::vector<Int> free_class(const H1Coordinates& H, const std::vector<VertexId>& loop) {
    auto cv = H.class_of_loop(loop);
    if (!cv.torsion_part.empty())
        throw std::logic_error("expected torsion-free homology while orienting attaching curves");
    return cv.free_part;
}

// Orient `cycle` so that its class equals `target`; the reverse traversal
// gets -target.  A zero target accepts the cycle as is.
void orient_cycle(const H1Coordinates& H, std::vector<VertexId>& cycle,
                  const std::vector<Int>& target) {
    std::vector<Int> cls = free_class(H, cycle);
    if (cls == target) return;
    bool zero = true;
    for (const Int& t : target)
        if (t != 0) zero = false;
    if (zero) return;
    std::vector<Int> neg(target.size());
    for (size_t i = 0; i < target.size(); ++i) neg[i] = -target[i];
    if (cls == neg) {
        std::reverse(cycle.begin() + 1, cycle.end()); // keep the base first
        return;
    }
    throw std::logic_error("attaching curve class matches neither orientation of its word");
}

struct RelSpec {
    SideSpec lhs, rhs;
    // Power-free fallback: realize the relation as one disk along this
    // cyclically reduced relator word instead of the telescope pair.
    Word plain_relator;
    bool plain() const { return !plain_relator.empty(); }
};

void attach_plain_relator_disk(Complex2& K, const MarkedComplex& circles, const Word& r) {
    Assembler A(K);
    std::vector<std::array<VertexId, 2>> segs;
    for (const Letter& l : r.letters) {
        const auto& circ = circles.path("a" + std::to_string(l.gen + 1));
        if (l.sign > 0)
            segs.push_back({circ[1], circ[2]});
        else
            segs.push_back({circ[2], circ[1]});
    }
    attach_window_disk(A, circles.base_vertex, segs);
    K = A.finish();
}

Complex2 build_relator_complex(int n, const std::vector<RelSpec>& rels) {
    MarkedComplex circles = bouquet(n);
    Complex2 K = circles.complex;

    std::vector<std::pair<std::vector<VertexId>, std::vector<VertexId>>> pending;
    for (const RelSpec& r : rels) {
        if (r.plain()) {
            attach_plain_relator_disk(K, circles, r.plain_relator);
            pending.emplace_back(); // keeps indices aligned with rels
            continue;
        }
        auto t1 = build_power_side(K, circles, r.lhs);
        auto t2 = build_power_side(K, circles, r.rhs);
        pending.emplace_back(std::move(t1), std::move(t2));
    }

    // Everything so far deformation retracts onto the bouquet, so H1 is
    // free on the circle classes; orient every attaching cycle before the
    // identifications change the group.
    {
        H1Coordinates H(K);
        std::vector<std::vector<Int>> circle_class(n);
        for (int g = 0; g < n; ++g)
            circle_class[g] = free_class(H, circles.path("a" + std::to_string(g + 1)));
        const size_t dim = circle_class.empty() ? 0 : circle_class[0].size();
        auto target_for = [&](const SideSpec& s) {
            std::vector<Int> t(dim, 0);
            auto ev = s.w.exponent_vector(n);
            for (int g = 0; g < n; ++g)
                for (size_t i = 0; i < dim; ++i)
                    t[i] += Int(ev[g]) * Int(s.power) * circle_class[g][i];
            if (s.extra_circle >= 0)
                for (size_t i = 0; i < dim; ++i) t[i] += circle_class[s.extra_circle][i];
            return t;
        };
        for (size_t r = 0; r < rels.size(); ++r) {
            if (rels[r].plain()) continue;
            orient_cycle(H, pending[r].first, target_for(rels[r].lhs));
            orient_cycle(H, pending[r].second, target_for(rels[r].rhs));
        }
    }

    for (size_t r = 0; r < pending.size(); ++r) {
        if (pending[r].first.empty()) continue;
        GlueResult q = identify_curves(K, pending[r].first, pending[r].second);
        K = std::move(q.complex);
        for (size_t r2 = r + 1; r2 < pending.size(); ++r2) {
            for (VertexId& v : pending[r2].first) v = q.x_map[v];
            for (VertexId& v : pending[r2].second) v = q.x_map[v];
        }
    }
    return K;
}

SideSpec plain_side(const Word& w, long long m) {
    SideSpec s;
    s.w = w;
    s.power = m;
    return s;
}

void check_power_relation(int n, const Word& w, const Word& v, long long m) {
    if (!w.is_cyclically_reduced() || !v.is_cyclically_reduced())
        throw std::invalid_argument("relation words must be cyclically reduced");
    if (w.length() < 2 || v.length() < 2)
        throw std::invalid_argument("relation words must have length >= 2");
    if (m < 2) throw std::invalid_argument("the power m must be >= 2");
    for (const Letter& l : w.letters)
        if (l.gen < 0 || l.gen >= n) throw std::invalid_argument("word leaves the generator range");
    for (const Letter& l : v.letters)
        if (l.gen < 0 || l.gen >= n) throw std::invalid_argument("word leaves the generator range");
}

} // namespace

Complex2 one_relator_power_complex(int n, const Word& w, const Word& v, long long m) {
    check_power_relation(n, w, v, m);
    return build_relator_complex(n, {{plain_side(w, m), plain_side(v, m), Word()}});
}

Complex2 multi_relator_complex(int n, const std::vector<PowerRelation>& relations) {
    if (relations.empty()) throw std::invalid_argument("need at least one relation");
    std::vector<RelSpec> rels;
    for (const auto& r : relations) {
        check_power_relation(n, r.w, r.v, r.m);
        rels.push_back({plain_side(r.w, r.m), plain_side(r.v, r.m), Word()});
    }
    return build_relator_complex(n, rels);
}

namespace {

std::vector<RelSpec> artin_rel_specs(const CoxeterMatrix& M) {
    if (!M.all_entries_at_least(3))
        throw std::invalid_argument("large type needs all finite entries >= 3");
    std::vector<RelSpec> rels;
    for (const auto& [ij, m] : M.finite) {
        auto [i, j] = ij;
        Word wij = alternating_product(i, j, 2);
        Word wji = alternating_product(j, i, 2);
        if (m % 2 == 0) {
            // <a_i a_j>^{2k} = <a_j a_i>^{2k}  <=>  (a_i a_j)^k = (a_j a_i)^k
            rels.push_back({plain_side(wij, m / 2), plain_side(wji, m / 2), Word()});
        } else if (m == 3) {
            // No telescope at power 1; one disk along the reduced relator
            // a_i a_j a_i (a_j a_i a_j)^-1 stays inside the vertex budget.
            RelSpec r;
            r.plain_relator = alternating_product(i, j, 3)
                                  .concat(alternating_product(j, i, 3).inverse())
                                  .cyclically_reduced();
            rels.push_back(r);
        } else {
            // <a_i a_j>^{2k+1} = (a_i a_j)^k a_i; the generator circle joins
            // the capping curve.
            SideSpec lhs = plain_side(wij, m / 2);
            lhs.extra_circle = i;
            SideSpec rhs = plain_side(wji, m / 2);
            rhs.extra_circle = j;
            rels.push_back({lhs, rhs, Word()});
        }
    }
    return rels;
}

} // namespace

Complex2 artin_large_complex(const CoxeterMatrix& M) {
    if (M.finite.empty()) return bouquet(M.n).complex;
    return build_relator_complex(M.n, artin_rel_specs(M));
}

Complex2 coxeter_large_complex(const CoxeterMatrix& M) {
    Complex2 K = artin_large_complex(M);
    // One projective plane per generator, glued along its in-plane circle.
    MarkedComplex circles = bouquet(M.n);
    MarkedComplex rp2 = moebius_band(); // for the circle mark only
    for (int g = 0; g < M.n; ++g) {
        const auto& circ = circles.path("a" + std::to_string(g + 1));
        Embedding iZ{triangle_circle(), {circ[0], circ[1], circ[2]}};
        const auto& inplane = rp2.path("circle");
        Embedding jZ{triangle_circle(), {inplane[0], inplane[1], inplane[2]}};
        K = glue(K, minimal_rp2(), iZ, jZ).complex;
    }
    return K;
}

} // namespace kw
