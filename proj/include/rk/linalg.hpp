#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rk/scalar.hpp"

namespace rk {

/// Dense row-major matrices over an exact scalar. Row-major because the
/// elimination kernels walk rows.
template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/**
 * In-place reduced row echelon form. Pivot choice: leftmost nonzero column,
 * first nonzero row from the top (the canonical tie-breaking used everywhere
 * in the engine). Returns the rank and, if `pivots` is given, the pivot
 * columns in increasing order. Pivoting can be restricted to the first
 * `pivotColLimit` columns (used for solving against a fixed span).
 */
template <typename T>
int rowEchelonFormInPlace(MatrixX<T>& a, std::vector<int>* pivots = nullptr,
                          int pivotColLimit = -1)
{
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    const int limit = pivotColLimit < 0 ? cols : pivotColLimit;
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < limit && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a(i, c) != T(0)) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        if (a(r, c) != T(1)) {
            const T inv = T(1) / a(r, c);
            a(r, c) = T(1);
            for (int j = c + 1; j < cols; ++j)
                if (a(r, j) != T(0)) a(r, j) *= inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const T f = a(i, c);
            if (f == T(0)) continue;
            a(i, c) = T(0);
            for (int j = c + 1; j < cols; ++j)
                if (a(r, j) != T(0)) a(i, j) -= f * a(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

/// RREF of a copy, trimmed to its nonzero rows.
template <typename T>
std::pair<MatrixX<T>, int> rowEchelonForm(const MatrixX<T>& m)
{
    MatrixX<T> a = m;
    const int r = rowEchelonFormInPlace(a);
    MatrixX<T> out = a.topRows(r);
    return {out, r};
}

template <typename T>
int rankOf(const MatrixX<T>& m)
{
    MatrixX<T> a = m;
    return rowEchelonFormInPlace(a);
}

/**
 * Basis of the right null space {x : m x = 0}, returned as rows in RREF.
 */
template <typename T>
MatrixX<T> kernelBasis(const MatrixX<T>& m)
{
    const int cols = static_cast<int>(m.cols());
    MatrixX<T> a = m;
    std::vector<int> pivots;
    const int r = rowEchelonFormInPlace(a, &pivots);

    std::vector<bool> isPivot(cols, false);
    for (int c : pivots) isPivot[c] = true;

    MatrixX<T> out(cols - r, cols);
    out.setZero();
    int row = 0;
    for (int f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        out(row, f) = T(1);
        for (int i = 0; i < r; ++i)
            out(row, pivots[i]) = -a(i, f);
        ++row;
    }
    rowEchelonFormInPlace(out);
    return out;
}

/**
 * Express each row of `rhsRows` as a linear combination of the rows of
 * `spanRows`: solves spanRows^T x = rhs^T. Elimination pivots only inside the
 * span block, so each right-hand side is solvable iff its residual column is
 * zero. Returns (coefficients, solvable flag) per rhs row.
 */
template <typename T>
std::pair<MatrixX<T>, std::vector<bool>>
expressInSpan(const MatrixX<T>& spanRows, const MatrixX<T>& rhsRows)
{
    const int n = static_cast<int>(spanRows.cols());
    const int k = static_cast<int>(spanRows.rows());
    const int q = static_cast<int>(rhsRows.rows());
    MatrixX<T> aug(n, k + q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) aug(i, j) = spanRows(j, i);
        for (int j = 0; j < q; ++j) aug(i, k + j) = rhsRows(j, i);
    }
    std::vector<int> pivots;
    const int r = rowEchelonFormInPlace(aug, &pivots, k);

    MatrixX<T> coeff(q, k);
    coeff.setZero();
    std::vector<bool> ok(q, true);
    for (int j = 0; j < q; ++j) {
        for (int i = 0; i < r; ++i)
            coeff(j, pivots[i]) = aug(i, k + j);
        for (int i = r; i < n; ++i)
            if (aug(i, k + j) != T(0)) { ok[j] = false; break; }
    }
    return {coeff, ok};
}

}  // namespace rk
