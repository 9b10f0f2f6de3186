// Dense matrices over an exact field, with Gauss-Jordan elimination.
//
// Everything downstream (multiplication tables, Nakayama solving, Serre
// pairings) reduces to these few routines, so they are kept deliberately
// small and deterministic: the pivot is always the first row with a nonzero
// entry in the current column, which makes rref/solve/invert reproducible
// across platforms for any field with exact arithmetic.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fcy/field.hpp"

namespace fcy {

template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_((size_t)rows * (size_t)cols, FieldOps<F>::zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = FieldOps<F>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int r, int c) { return data_[(size_t)r * cols_ + c]; }
    const F& at(int r, int c) const { return data_[(size_t)r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

  private:
    int rows_, cols_;
    std::vector<F> data_;
};

template <class F>
struct RowReduceResult {
    Matrix<F> rref;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form by Gauss-Jordan with first-nonzero pivoting.
template <class F>
RowReduceResult<F> row_reduce(Matrix<F> m) {
    RowReduceResult<F> out;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!FieldOps<F>::is_zero(m.at(i, c))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        F inv = FieldOps<F>::inverse(m.at(r, c));
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || FieldOps<F>::is_zero(m.at(i, c))) continue;
            F factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.rref = std::move(m);
    return out;
}

template <class F>
struct SolveResult {
    std::vector<F> particular;
    std::vector<std::vector<F>> kernel_basis;
};

// Solve a x = b.  Returns nullopt when inconsistent.  Free variables are set
// to zero in the particular solution; each kernel basis vector sets one free
// variable to 1 (in increasing column order) and the rest to 0.
template <class F>
std::optional<SolveResult<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    if ((int)b.size() != a.rows())
        throw std::invalid_argument("solve: rhs length != row count");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto rr = row_reduce(std::move(aug));
    // A pivot in the rhs column means 0 = 1 somewhere: no solution.
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == a.cols()) return std::nullopt;

    SolveResult<F> out;
    out.particular.assign(a.cols(), FieldOps<F>::zero());
    std::vector<int> pivot_row_of_col(a.cols(), -1);
    for (int r = 0; r < (int)rr.pivot_cols.size(); ++r)
        pivot_row_of_col[rr.pivot_cols[r]] = r;
    for (int c = 0; c < a.cols(); ++c)
        if (pivot_row_of_col[c] >= 0)
            out.particular[c] = rr.rref.at(pivot_row_of_col[c], a.cols());

    for (int free_col = 0; free_col < a.cols(); ++free_col) {
        if (pivot_row_of_col[free_col] >= 0) continue;
        std::vector<F> v(a.cols(), FieldOps<F>::zero());
        v[free_col] = FieldOps<F>::one();
        for (int c = 0; c < a.cols(); ++c)
            if (pivot_row_of_col[c] >= 0)
                v[c] = FieldOps<F>::negate(rr.rref.at(pivot_row_of_col[c], free_col));
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

// Kernel basis of a (columns of a spanning relations), same convention as solve.
template <class F>
std::vector<std::vector<F>> kernel(const Matrix<F>& a) {
    std::vector<F> zero(a.rows(), FieldOps<F>::zero());
    return solve(a, zero)->kernel_basis;
}

// Inverse of a square matrix, or nullopt if singular.
template <class F>
std::optional<Matrix<F>> invert(const Matrix<F>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: non-square");
    int n = a.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = FieldOps<F>::one();
    }
    auto rr = row_reduce(std::move(aug));
    for (int i = 0; i < n; ++i)
        if (i >= (int)rr.pivot_cols.size() || rr.pivot_cols[i] != i) return std::nullopt;
    Matrix<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.rref.at(i, n + j);
    return inv;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    Matrix<F> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (FieldOps<F>::is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return c;
}

template <class F>
std::vector<F> matvec(const Matrix<F>& a, const std::vector<F>& x) {
    if ((int)x.size() != a.cols()) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<F> y(a.rows(), FieldOps<F>::zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!FieldOps<F>::is_zero(a.at(i, j))) y[i] = y[i] + a.at(i, j) * x[j];
    return y;
}

}  // namespace fcy
