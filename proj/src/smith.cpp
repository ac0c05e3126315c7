#include "kw/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace kw {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out(i, j) += x * o(k, j);
        }
    return out;
}

std::vector<Int> SmithResult::torsion() const {
    std::vector<Int> t;
    for (int i = 0; i < rank; ++i)
        if (D(i, i) > 1) t.push_back(D(i, i));
    return t;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Position of the nonzero entry of smallest magnitude in A[s:, s:], or
// (-1,-1) if the submatrix vanishes.
std::pair<int, int> min_pivot(const IntMatrix& A, int s) {
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = s; i < A.rows(); ++i)
        for (int j = s; j < A.cols(); ++j) {
            if (A(i, j) == 0) continue;
            Int m = abs_int(A(i, j));
            if (bi < 0 || m < best) {
                best = m;
                bi = i;
                bj = j;
            }
        }
    return {bi, bj};
}

bool is_lone(const IntMatrix& A, int s) {
    for (int i = s + 1; i < A.rows(); ++i)
        if (A(i, s) != 0) return false;
    for (int j = s + 1; j < A.cols(); ++j)
        if (A(s, j) != 0) return false;
    return true;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
    SmithResult res;
    const int m = A.rows(), n = A.cols();
    res.D = A;
    res.U = IntMatrix::identity(m);
    res.V = IntMatrix::identity(n);
    res.Vinv = IntMatrix::identity(n);
    IntMatrix& D = res.D;

    const int nmin = m < n ? m : n;
    int s = 0;
    for (; s < nmin; ++s) {
        auto [pi, pj] = min_pivot(D, s);
        if (pi < 0) break; // submatrix is zero

        for (;;) {
            std::tie(pi, pj) = min_pivot(D, s);
            D.swap_rows(s, pi);
            res.U.swap_rows(s, pi);
            D.swap_cols(s, pj);
            res.V.swap_cols(s, pj);
            res.Vinv.swap_rows(s, pj);

            for (int i = s + 1; i < m; ++i) {
                if (D(i, s) == 0) continue;
                Int q = D(i, s) / D(s, s);
                D.add_row(i, s, -q);
                res.U.add_row(i, s, -q);
            }
            for (int j = s + 1; j < n; ++j) {
                if (D(s, j) == 0) continue;
                Int q = D(s, j) / D(s, s);
                D.add_col(j, s, -q);
                res.V.add_col(j, s, -q);
                res.Vinv.add_row(s, j, q); // inverse of the column op
            }
            if (!is_lone(D, s)) continue;

            // Divisibility: D(s,s) must divide the rest of the submatrix.
            bool divides = true;
            int ri = -1;
            for (int i = s + 1; i < m && divides; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (D(i, j) % D(s, s) != 0) {
                        divides = false;
                        ri = i;
                        break;
                    }
            if (divides) break;
            D.add_row(s, ri, 1);
            res.U.add_row(s, ri, 1);
        }

        if (D(s, s) < 0) {
            D.negate_row(s);
            res.U.negate_row(s);
        }
    }
    res.rank = 0;
    for (int i = 0; i < nmin; ++i)
        if (D(i, i) != 0) ++res.rank;
    return res;
}

int integer_rank(IntMatrix A) {
    // Plain fraction-free Gaussian elimination; rank only, no transforms.
    int rank = 0;
    const int m = A.rows(), n = A.cols();
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (A(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        A.swap_rows(rank, pivot);
        for (int i = rank + 1; i < m; ++i) {
            if (A(i, col) == 0) continue;
            Int a = A(rank, col), b = A(i, col);
            for (int j = col; j < n; ++j) A(i, j) = A(i, j) * a - A(rank, j) * b;
        }
        ++rank;
    }
    return rank;
}

} // namespace kw
