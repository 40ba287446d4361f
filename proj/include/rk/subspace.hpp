#pragma once

#include <stdexcept>
#include <vector>

#include "rk/linalg.hpp"

namespace rk {

/**
 * A subspace of a coordinate space, stored as a reduced-row-echelon basis.
 * The RREF matrix is the unique canonical representative: two subspaces are
 * equal iff their basis matrices are identical.
 */
template <typename T>
class Subspace
{
public:
    Subspace() : ambient_(0) {}

    explicit Subspace(int ambientDim)
        : ambient_(ambientDim), basis_(0, ambientDim)
    {
    }

    /// Span of the given rows (reduced on construction).
    static Subspace span(const MatrixX<T>& rows)
    {
        Subspace s(static_cast<int>(rows.cols()));
        auto [rref, rank] = rowEchelonForm(rows);
        s.basis_ = std::move(rref);
        (void)rank;
        return s;
    }

    static Subspace zero(int ambientDim) { return Subspace(ambientDim); }

    static Subspace full(int ambientDim)
    {
        MatrixX<T> id(ambientDim, ambientDim);
        id.setZero();
        for (int i = 0; i < ambientDim; ++i) id(i, i) = T(1);
        Subspace s(ambientDim);
        s.basis_ = std::move(id);
        return s;
    }

    int ambientDim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    const MatrixX<T>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const
    {
        return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() &&
               basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::vector<int> pivotColumns() const
    {
        std::vector<int> p;
        p.reserve(dim());
        for (int i = 0; i < dim(); ++i) {
            for (int c = 0; c < ambient_; ++c) {
                if (basis_(i, c) != T(0)) { p.push_back(c); break; }
            }
        }
        return p;
    }

    bool contains(const VectorX<T>& v) const
    {
        VectorX<T> w = v;
        for (int i = 0; i < dim(); ++i) {
            const int c = pivotOf(i);
            if (c < ambient_ && w(c) != T(0)) {
                const T f = w(c);
                for (int j = c; j < ambient_; ++j)
                    if (basis_(i, j) != T(0)) w(j) -= f * basis_(i, j);
            }
        }
        for (int j = 0; j < ambient_; ++j)
            if (w(j) != T(0)) return false;
        return true;
    }

    bool containsSubspace(const Subspace& other) const
    {
        for (int i = 0; i < other.dim(); ++i) {
            VectorX<T> v = other.basis().row(i).transpose();
            if (!contains(v)) return false;
        }
        return true;
    }

private:
    int pivotOf(int row) const
    {
        for (int c = 0; c < ambient_; ++c)
            if (basis_(row, c) != T(0)) return c;
        return ambient_;
    }

    int ambient_;
    MatrixX<T> basis_;
};

template <typename T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b)
{
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("subspace sum: ambient dimension mismatch");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    MatrixX<T> stacked(a.dim() + b.dim(), a.ambientDim());
    stacked.topRows(a.dim()) = a.basis();
    stacked.bottomRows(b.dim()) = b.basis();
    return Subspace<T>::span(stacked);
}

/// Intersection via the kernel of the stacked-coordinates system
/// [A^T | -B^T] u = 0; the A-part of each kernel vector spans a ∩ b.
template <typename T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b)
{
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("subspace intersect: ambient dimension mismatch");
    const int n = a.ambientDim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace<T>::zero(n);
    if (a.dim() == n) return b;
    if (b.dim() == n) return a;
    MatrixX<T> sys(n, a.dim() + b.dim());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < a.dim(); ++j) sys(i, j) = a.basis()(j, i);
        for (int j = 0; j < b.dim(); ++j) sys(i, a.dim() + j) = -b.basis()(j, i);
    }
    MatrixX<T> ker = kernelBasis(sys);
    if (ker.rows() == 0) return Subspace<T>::zero(n);
    MatrixX<T> vecs(ker.rows(), n);
    for (int r = 0; r < ker.rows(); ++r) {
        for (int c = 0; c < n; ++c) {
            T acc(0);
            for (int j = 0; j < a.dim(); ++j)
                if (ker(r, j) != T(0)) acc += ker(r, j) * a.basis()(j, c);
            vecs(r, c) = acc;
        }
    }
    return Subspace<T>::span(vecs);
}

/// Annihilator in the dual coordinate space: {f : f(v) = 0 for v in s}.
template <typename T>
Subspace<T> annihilator(const Subspace<T>& s)
{
    if (s.dim() == 0) return Subspace<T>::full(s.ambientDim());
    return Subspace<T>::span(kernelBasis(s.basis()));
}

/// Kernel of a matrix as a subspace of its column space's domain.
template <typename T>
Subspace<T> kernel(const MatrixX<T>& m)
{
    return Subspace<T>::span(kernelBasis(m));
}

/**
 * A subquotient N/(D ∩ N) of a fixed coordinate space. Coset representatives
 * are the rows of the numerator's RREF basis whose pivots are not pivots of
 * RREF(N ∩ D); this extends the denominator's basis to the numerator's
 * deterministically by pivot order.
 */
template <typename T>
class Subquotient
{
public:
    Subquotient() = default;

    Subquotient(Subspace<T> numerator, Subspace<T> denominator)
        : num_(std::move(numerator)), den_(std::move(denominator))
    {
        if (num_.ambientDim() != den_.ambientDim())
            throw std::invalid_argument("subquotient: ambient dimension mismatch");
        const Subspace<T> nd = intersect(num_, den_);
        std::vector<int> ndPivots = nd.pivotColumns();
        std::vector<bool> isNd(num_.ambientDim(), false);
        for (int c : ndPivots) isNd[c] = true;

        const auto numPivots = num_.pivotColumns();
        std::vector<int> keep;
        for (int i = 0; i < num_.dim(); ++i)
            if (!isNd[numPivots[i]]) keep.push_back(i);

        reps_.resize(static_cast<int>(keep.size()), num_.ambientDim());
        for (int i = 0; i < static_cast<int>(keep.size()); ++i)
            reps_.row(i) = num_.basis().row(keep[i]);
    }

    int ambientDim() const { return num_.ambientDim(); }
    int dim() const { return static_cast<int>(reps_.rows()); }
    const Subspace<T>& numerator() const { return num_; }
    const Subspace<T>& denominator() const { return den_; }
    /// Coset representatives in ambient coordinates, one row per basis coset.
    const MatrixX<T>& cosetReps() const { return reps_; }

private:
    Subspace<T> num_;
    Subspace<T> den_;
    MatrixX<T> reps_;
};

/**
 * Matrix of the map induced on subquotients by `ambientMap` (codomain basis
 * coords in columns... rows: the produced matrix is (dim codomain) x
 * (dim domain), acting on coordinate columns). Throws if the map does not
 * carry the domain numerator into codomain numerator + denominator.
 */
template <typename T>
MatrixX<T> inducedMap(const Subquotient<T>& domain, const Subquotient<T>& codomain,
                      const MatrixX<T>& ambientMap)
{
    const int p = domain.dim();
    const int q = codomain.dim();
    MatrixX<T> images(p, codomain.ambientDim());
    for (int i = 0; i < p; ++i) {
        VectorX<T> v = domain.cosetReps().row(i).transpose();
        images.row(i) = (ambientMap * v).transpose();
    }
    // express images in [coset reps | denominator basis]
    const auto& reps = codomain.cosetReps();
    const auto& den = codomain.denominator().basis();
    MatrixX<T> spanRows(q + den.rows(), codomain.ambientDim());
    if (q > 0) spanRows.topRows(q) = reps;
    if (den.rows() > 0) spanRows.bottomRows(den.rows()) = den;
    auto [coeff, ok] = expressInSpan(spanRows, images);
    for (bool good : ok)
        if (!good)
            throw std::domain_error(
                "inducedMap: image escapes codomain numerator + denominator");
    MatrixX<T> out(q, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) out(j, i) = coeff(i, j);
    return out;
}

/// Induced map along the identity ambient map (the common case: canonical
/// surjections and inclusions between subquotients of one ambient space).
template <typename T>
MatrixX<T> inducedIdentityMap(const Subquotient<T>& domain, const Subquotient<T>& codomain)
{
    const int p = domain.dim();
    const int q = codomain.dim();
    const auto& reps = codomain.cosetReps();
    const auto& den = codomain.denominator().basis();
    MatrixX<T> spanRows(q + den.rows(), codomain.ambientDim());
    if (q > 0) spanRows.topRows(q) = reps;
    if (den.rows() > 0) spanRows.bottomRows(den.rows()) = den;
    auto [coeff, ok] = expressInSpan(spanRows, domain.cosetReps());
    for (bool good : ok)
        if (!good)
            throw std::domain_error(
                "inducedIdentityMap: domain does not map into codomain");
    MatrixX<T> out(q, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) out(j, i) = coeff(i, j);
    return out;
}

}  // namespace rk
