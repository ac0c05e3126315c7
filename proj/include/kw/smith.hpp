#ifndef KW_SMITH_HPP
#define KW_SMITH_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kw {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arithmetic.  Smith normal form entries can
// blow up on intermediate steps, so everything is arbitrary precision.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row(int dst, int src, const Int& f);  // row dst += f * row src
    void add_col(int dst, int src, const Int& f);  // col dst += f * col src
    void negate_row(int i);
    void negate_col(int i);

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// U * A * V = D with U, V unimodular and D diagonal with the divisibility
// chain d1 | d2 | ... .  Vinv is maintained alongside V so kernel
// coordinates can be read off without a separate inversion.
struct SmithResult {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
    IntMatrix Vinv;
    int rank = 0;

    // Diagonal entries > 1 (the nontrivial invariant factors).
    std::vector<Int> torsion() const;
};

SmithResult smith_normal_form(const IntMatrix& A);

// Rank over the rationals, via fraction-free elimination.
int integer_rank(IntMatrix A);

} // namespace kw

#endif
