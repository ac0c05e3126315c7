#include "kw/homology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kw {

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < free_rank; ++i) {
        if (!first) os << " + ";
        os << "Z";
        first = false;
    }
    for (const Int& d : invariant_factors) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

IntMatrix boundary1(const Complex2& K) {
    IntMatrix d(K.vertex_count(), K.edge_count());
    for (int j = 0; j < K.edge_count(); ++j) {
        const Edge& e = K.edges()[j];
        d(e.v[0], j) = -1;
        d(e.v[1], j) = 1;
    }
    return d;
}

IntMatrix boundary2(const Complex2& K) {
    IntMatrix d(K.edge_count(), K.triangle_count());
    for (int j = 0; j < K.triangle_count(); ++j) {
        const Triangle& t = K.triangles()[j];
        d(K.edge_index(t.v[1], t.v[2]), j) = 1;
        d(K.edge_index(t.v[0], t.v[2]), j) = -1;
        d(K.edge_index(t.v[0], t.v[1]), j) = 1;
    }
    return d;
}

HomologyProfile homology(const Complex2& K) {
    HomologyProfile h;
    const int s0 = K.vertex_count(), s1 = K.edge_count(), s2 = K.triangle_count();
    const int r1 = s1 == 0 ? 0 : integer_rank(boundary1(K));
    SmithResult snf2;
    int r2 = 0;
    if (s2 > 0) {
        snf2 = smith_normal_form(boundary2(K));
        r2 = snf2.rank;
        h.h1_torsion = snf2.torsion();
    }
    h.b0 = s0 - r1;
    h.b1 = s1 - r1 - r2;
    h.b2 = s2 - r2;
    return h;
}

AbelianGroup abelianization(const Presentation& P) {
    const int n = P.generator_count;
    IntMatrix R(static_cast<int>(P.relators.size()), n);
    for (int i = 0; i < static_cast<int>(P.relators.size()); ++i) {
        auto ev = P.relators[i].exponent_vector(n);
        for (int j = 0; j < n; ++j) R(i, j) = ev[j];
    }
    AbelianGroup g;
    if (P.relators.empty()) {
        g.free_rank = n;
        return g;
    }
    SmithResult snf = smith_normal_form(R);
    g.free_rank = n - snf.rank;
    g.invariant_factors = snf.torsion();
    return g;
}

namespace {

long long binom(long long n, int k) {
    if (n < k) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

bool betti_bound_check(const Complex2& K) {
    HomologyProfile h = homology(K);
    const long long n = K.vertex_count();
    return h.b1 <= binom(n - 1, 2) && h.b2 <= binom(n - 1, 3);
}

Presentation edge_path_presentation(const Complex2& K, VertexId base) {
    if (!K.is_connected()) throw std::invalid_argument("edge-path group needs a connected complex");
    if (base < 0 || base >= K.vertex_count()) throw std::invalid_argument("base vertex not in complex");

    // BFS spanning tree from the base, neighbors visited in increasing order.
    std::vector<char> in_tree_edge(K.edge_count(), 0);
    std::vector<char> seen(K.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(base);
    seen[base] = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : K.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            in_tree_edge[K.edge_index(v, w)] = 1;
            q.push(w);
        }
    }

    // Generator index per non-tree edge, in edge order.
    std::vector<int> gen_of_edge(K.edge_count(), -1);
    int n_gens = 0;
    for (int i = 0; i < K.edge_count(); ++i)
        if (!in_tree_edge[i]) gen_of_edge[i] = n_gens++;

    Presentation P;
    P.generator_count = n_gens;
    for (const Triangle& t : K.triangles()) {
        // Boundary word a->b->c->a; tree edges contribute nothing.
        Word w;
        auto emit = [&](VertexId x, VertexId y) {
            int ei = K.edge_index(x, y);
            int g = gen_of_edge[ei];
            if (g < 0) return;
            // Generator is oriented from the smaller to the larger id.
            w.letters.push_back({g, x < y ? 1 : -1});
        };
        emit(t.v[0], t.v[1]);
        emit(t.v[1], t.v[2]);
        emit(t.v[2], t.v[0]);
        P.relators.push_back(w.freely_reduced());
    }
    return P;
}

namespace {

// Substitute g -> rep (a word) in w, where occurrences of g^-1 get rep^-1.
Word substitute(const Word& w, int g, const Word& rep) {
    Word out;
    Word rep_inv = rep.inverse();
    for (const Letter& l : w.letters) {
        if (l.gen != g) {
            out.letters.push_back(l);
        } else {
            const Word& r = l.sign > 0 ? rep : rep_inv;
            out.letters.insert(out.letters.end(), r.letters.begin(), r.letters.end());
        }
    }
    return out.freely_reduced();
}

int count_occurrences(const Word& w, int g) {
    int c = 0;
    for (const Letter& l : w.letters)
        if (l.gen == g) ++c;
    return c;
}

} // namespace

Presentation tietze_simplify(const Presentation& P, int move_budget) {
    Presentation cur = P;
    std::vector<char> eliminated(cur.generator_count, 0);
    for (Word& r : cur.relators) r = r.cyclically_reduced();
    int moves = 0;

    auto cleanup = [&]() {
        std::vector<Word> keep;
        std::set<std::string> seen;
        for (Word& r : cur.relators) {
            r = r.cyclically_reduced();
            if (r.empty()) continue;
            // Dedup exact relators and exact inverses.
            std::string k = r.str(), ki = r.inverse().str();
            if (seen.count(k) || seen.count(ki)) continue;
            seen.insert(k);
            keep.push_back(r);
        }
        cur.relators = std::move(keep);
    };
    cleanup();

    bool progress = true;
    while (progress && moves < move_budget) {
        progress = false;

        // Eliminate a generator that occurs exactly once in some relator,
        // preferring short relators so substitutions stay small.
        std::vector<int> order(cur.relators.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return cur.relators[a].length() < cur.relators[b].length();
        });

        for (int ri : order) {
            const Word& r = cur.relators[ri];
            int pick = -1;
            for (const Letter& l : r.letters)
                if (count_occurrences(r, l.gen) == 1) {
                    pick = l.gen;
                    break;
                }
            if (pick < 0) continue;

            // r = u g^s v  =>  g^s = u^-1 v^-1, g = (u^-1 v^-1)^s.
            int pos = 0;
            while (r.letters[pos].gen != pick) ++pos;
            int sgn = r.letters[pos].sign;
            Word u(std::vector<Letter>(r.letters.begin(), r.letters.begin() + pos));
            Word v(std::vector<Letter>(r.letters.begin() + pos + 1, r.letters.end()));
            Word rep = u.inverse().concat(v.inverse());
            if (sgn < 0) rep = rep.inverse();

            std::vector<Word> next;
            for (int i = 0; i < static_cast<int>(cur.relators.size()); ++i) {
                if (i == ri) continue;
                next.push_back(substitute(cur.relators[i], pick, rep));
            }
            cur.relators = std::move(next);
            eliminated[pick] = 1;
            cleanup();
            ++moves;
            progress = true;
            break;
        }
    }

    // Renumber the surviving generators densely.  Generators never
    // eliminated stay even when no relator mentions them (they are free
    // factors); eliminated slots disappear with their defining relator.
    std::map<int, int> renumber;
    int next_id = 0;
    for (int g = 0; g < cur.generator_count; ++g)
        if (!eliminated[g]) renumber[g] = next_id++;
    Presentation out;
    out.generator_count = next_id;
    for (const Word& r : cur.relators) {
        Word w;
        for (const Letter& l : r.letters) w.letters.push_back({renumber.at(l.gen), l.sign});
        out.relators.push_back(w);
    }
    return out;
}

int used_generator_count(const Presentation& P) {
    std::set<int> used;
    for (const Word& r : P.relators)
        for (const Letter& l : r.letters) used.insert(l.gen);
    return static_cast<int>(used.size());
}

H1Coordinates::H1Coordinates(const Complex2& K) : K_(K) {
    const int s1 = K.edge_count();
    // Kernel of d1 in the coordinates provided by its Smith form: a vector z
    // is a cycle iff the first rank1 entries of V1^-1 z vanish; the
    // remaining entries are its kernel coordinates.
    SmithResult s1f = smith_normal_form(boundary1(K));
    const int r1 = s1f.rank;
    const int kdim = s1 - r1;
    kernel_coords_ = IntMatrix(kdim, s1);
    for (int i = 0; i < kdim; ++i)
        for (int j = 0; j < s1; ++j) kernel_coords_(i, j) = s1f.Vinv(r1 + i, j);

    // Boundaries of triangles expressed in kernel coordinates, then a second
    // Smith form gives H1 = Z^kdim / im.
    IntMatrix W = kernel_coords_ * boundary2(K);
    SmithResult s2f = smith_normal_form(W);
    u2_ = s2f.U;
    rank2_ = s2f.rank;
    diag2_.resize(rank2_);
    for (int i = 0; i < rank2_; ++i) diag2_[i] = s2f.D(i, i);
    for (const Int& d : diag2_)
        if (d > 1) torsion_factors_.push_back(d);
}

std::vector<Int> loop_edge_vector(const Complex2& K, const std::vector<VertexId>& loop) {
    std::vector<Int> z(K.edge_count(), 0);
    if (loop.size() < 2) return z;
    const size_t n = loop.size();
    const bool explicitly_closed = loop.front() == loop.back();
    const size_t steps = explicitly_closed ? n - 1 : n;
    for (size_t i = 0; i < steps; ++i) {
        VertexId a = loop[i], b = loop[(i + 1) % n];
        if (a == b) throw std::invalid_argument("loop repeats a vertex consecutively");
        int ei = K.edge_index(a, b);
        if (ei < 0)
            throw std::invalid_argument("loop uses missing edge {" + std::to_string(a) + "," +
                                        std::to_string(b) + "}");
        // Oriented edge runs from the smaller to the larger id.
        z[ei] += (a < b) ? 1 : -1;
    }
    return z;
}

H1Coordinates::ClassVector H1Coordinates::class_of_loop(const std::vector<VertexId>& loop) const {
    std::vector<Int> z = loop_edge_vector(K_, loop);
    const int kdim = kernel_coords_.rows();
    IntMatrix y(kdim, 1);
    for (int i = 0; i < kdim; ++i) {
        Int acc = 0;
        for (int j = 0; j < static_cast<int>(z.size()); ++j)
            if (z[j] != 0) acc += kernel_coords_(i, j) * z[j];
        y(i, 0) = acc;
    }
    IntMatrix c = u2_ * y;
    ClassVector cv;
    for (int i = 0; i < rank2_; ++i) {
        if (diag2_[i] > 1) {
            Int m = c(i, 0) % diag2_[i];
            if (m < 0) m += diag2_[i];
            cv.torsion_part.push_back(m);
        }
    }
    for (int i = rank2_; i < kdim; ++i) cv.free_part.push_back(c(i, 0));
    return cv;
}

bool H1Coordinates::is_multiple(const ClassVector& c, const ClassVector& b, const Int& m,
                                const std::vector<Int>& torsion_factors) {
    if (c.free_part.size() != b.free_part.size() ||
        c.torsion_part.size() != b.torsion_part.size())
        return false;
    for (size_t i = 0; i < c.free_part.size(); ++i)
        if (c.free_part[i] != m * b.free_part[i]) return false;
    for (size_t i = 0; i < c.torsion_part.size(); ++i) {
        Int want = (m * b.torsion_part[i]) % torsion_factors[i];
        if (want < 0) want += torsion_factors[i];
        if (c.torsion_part[i] != want) return false;
    }
    return true;
}

} // namespace kw
