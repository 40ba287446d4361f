#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "rk/complex.hpp"
#include "rk/subspace.hpp"

namespace rk {

/// Torus weight (multigrading) of a basis vector; empty means unweighted.
using Weight = std::vector<int>;

/**
 * A tensor product of based slots with an optional weight per basis index of
 * each slot. Basis indices are lexicographic with the leftmost factor most
 * significant. When weights are present the coordinates are partitioned into
 * weight blocks, and every subspace the engine builds is block-homogeneous,
 * so all linear algebra happens inside blocks.
 */
class TensorSpace
{
public:
    TensorSpace() = default;

    /// slotWeights may be empty (unweighted); otherwise one weight per index
    /// of every slot, all of one length.
    static TensorSpace build(std::vector<int> slotDims,
                             std::vector<std::vector<Weight>> slotWeights = {})
    {
        TensorSpace s;
        s.slotDims_ = std::move(slotDims);
        s.slotWeights_ = std::move(slotWeights);
        s.dim_ = 1;
        for (int d : s.slotDims_) {
            if (d <= 0) throw std::invalid_argument("tensor slot of nonpositive dim");
            s.dim_ *= d;
        }
        s.strides_.assign(s.slotDims_.size(), 1);
        for (int i = static_cast<int>(s.slotDims_.size()) - 2; i >= 0; --i)
            s.strides_[i] = s.strides_[i + 1] * s.slotDims_[i + 1];

        const bool weighted = !s.slotWeights_.empty();
        if (weighted && s.slotWeights_.size() != s.slotDims_.size())
            throw std::invalid_argument("slot weights shape mismatch");

        std::map<Weight, int> blockOf;
        s.coordBlock_.resize(s.dim_);
        s.coordPos_.resize(s.dim_);
        std::vector<int> multi(s.slotDims_.size(), 0);
        for (int g = 0; g < s.dim_; ++g) {
            Weight w;
            if (weighted) {
                for (size_t sl = 0; sl < s.slotDims_.size(); ++sl) {
                    const Weight& sw = s.slotWeights_[sl][multi[sl]];
                    if (w.empty()) w.assign(sw.size(), 0);
                    if (sw.size() != w.size())
                        throw std::invalid_argument("inconsistent weight lengths");
                    for (size_t k = 0; k < w.size(); ++k) w[k] += sw[k];
                }
            }
            auto [it, fresh] = blockOf.try_emplace(w, static_cast<int>(s.blockWeights_.size()));
            if (fresh) {
                s.blockWeights_.push_back(w);
                s.blockCoords_.emplace_back();
            }
            s.coordBlock_[g] = it->second;
            s.coordPos_[g] = static_cast<int>(s.blockCoords_[it->second].size());
            s.blockCoords_[it->second].push_back(g);
            // advance multi-index (rightmost fastest)
            for (int sl = static_cast<int>(s.slotDims_.size()) - 1; sl >= 0; --sl) {
                if (++multi[sl] < s.slotDims_[sl]) break;
                multi[sl] = 0;
            }
        }
        return s;
    }

    int dim() const { return dim_; }
    int slotCount() const { return static_cast<int>(slotDims_.size()); }
    int slotDim(int i) const { return slotDims_[i]; }
    const std::vector<int>& slotDims() const { return slotDims_; }
    int stride(int i) const { return strides_[i]; }
    bool weighted() const { return !slotWeights_.empty(); }
    const std::vector<std::vector<Weight>>& slotWeights() const { return slotWeights_; }

    int blockCount() const { return static_cast<int>(blockWeights_.size()); }
    const Weight& blockWeight(int b) const { return blockWeights_[b]; }
    const std::vector<int>& blockCoords(int b) const { return blockCoords_[b]; }
    int blockOfCoord(int g) const { return coordBlock_[g]; }
    int posOfCoord(int g) const { return coordPos_[g]; }

private:
    std::vector<int> slotDims_;
    std::vector<std::vector<Weight>> slotWeights_;
    std::vector<int> strides_;
    int dim_ = 1;
    std::vector<Weight> blockWeights_;
    std::vector<std::vector<int>> blockCoords_;
    std::vector<int> coordBlock_, coordPos_;
};

/// A block-homogeneous subspace: one Subspace per weight block.
template <typename T>
class BlockedSubspace
{
public:
    BlockedSubspace() = default;
    explicit BlockedSubspace(std::vector<Subspace<T>> blocks) : blocks_(std::move(blocks)) {}

    static BlockedSubspace zero(const TensorSpace& sp)
    {
        std::vector<Subspace<T>> b;
        for (int i = 0; i < sp.blockCount(); ++i)
            b.push_back(Subspace<T>::zero(static_cast<int>(sp.blockCoords(i).size())));
        return BlockedSubspace(std::move(b));
    }

    static BlockedSubspace full(const TensorSpace& sp)
    {
        std::vector<Subspace<T>> b;
        for (int i = 0; i < sp.blockCount(); ++i)
            b.push_back(Subspace<T>::full(static_cast<int>(sp.blockCoords(i).size())));
        return BlockedSubspace(std::move(b));
    }

    /// Build from sparse global rows, each of which must be block-homogeneous.
    static BlockedSubspace fromRows(const TensorSpace& sp,
                                    const std::vector<std::vector<std::pair<int, T>>>& rows)
    {
        std::vector<std::vector<std::vector<std::pair<int, T>>>> perBlock(sp.blockCount());
        for (const auto& row : rows) {
            if (row.empty()) continue;
            const int b = sp.blockOfCoord(row.front().first);
            std::vector<std::pair<int, T>> local;
            local.reserve(row.size());
            for (const auto& [g, v] : row) {
                if (sp.blockOfCoord(g) != b)
                    throw std::invalid_argument("row is not weight-homogeneous");
                local.emplace_back(sp.posOfCoord(g), v);
            }
            perBlock[b].push_back(std::move(local));
        }
        std::vector<Subspace<T>> blocks;
        for (int b = 0; b < sp.blockCount(); ++b) {
            const int n = static_cast<int>(sp.blockCoords(b).size());
            MatrixX<T> m(static_cast<int>(perBlock[b].size()), n);
            m.setZero();
            for (size_t r = 0; r < perBlock[b].size(); ++r)
                for (const auto& [pos, v] : perBlock[b][r]) m(static_cast<int>(r), pos) = v;
            blocks.push_back(Subspace<T>::span(m));
        }
        return BlockedSubspace(std::move(blocks));
    }

    int blockCount() const { return static_cast<int>(blocks_.size()); }
    const Subspace<T>& block(int b) const { return blocks_[b]; }

    int dim() const
    {
        int d = 0;
        for (const auto& b : blocks_) d += b.dim();
        return d;
    }

    bool operator==(const BlockedSubspace& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<Subspace<T>> blocks_;
};

template <typename T>
BlockedSubspace<T> sum(const BlockedSubspace<T>& a, const BlockedSubspace<T>& b)
{
    std::vector<Subspace<T>> out;
    for (int i = 0; i < a.blockCount(); ++i) out.push_back(sum(a.block(i), b.block(i)));
    return BlockedSubspace<T>(std::move(out));
}

template <typename T>
BlockedSubspace<T> intersect(const BlockedSubspace<T>& a, const BlockedSubspace<T>& b)
{
    std::vector<Subspace<T>> out;
    for (int i = 0; i < a.blockCount(); ++i) out.push_back(intersect(a.block(i), b.block(i)));
    return BlockedSubspace<T>(std::move(out));
}

template <typename T>
BlockedSubspace<T> annihilator(const BlockedSubspace<T>& a)
{
    std::vector<Subspace<T>> out;
    for (int i = 0; i < a.blockCount(); ++i) out.push_back(annihilator(a.block(i)));
    return BlockedSubspace<T>(std::move(out));
}

/// Blockwise subquotient with per-block coset data.
template <typename T>
class BlockedSubquotient
{
public:
    BlockedSubquotient() = default;
    BlockedSubquotient(const BlockedSubspace<T>& num, const BlockedSubspace<T>& den)
    {
        for (int b = 0; b < num.blockCount(); ++b)
            blocks_.emplace_back(num.block(b), den.block(b));
    }

    int blockCount() const { return static_cast<int>(blocks_.size()); }
    const Subquotient<T>& block(int b) const { return blocks_[b]; }

    int dim() const
    {
        int d = 0;
        for (const auto& b : blocks_) d += b.dim();
        return d;
    }

    std::vector<int> blockDims() const
    {
        std::vector<int> out;
        for (const auto& b : blocks_) out.push_back(b.dim());
        return out;
    }

private:
    std::vector<Subquotient<T>> blocks_;
};

/**
 * An ambient tensor space together with an ordered list of member subspaces.
 * Every graded piece, Schur module, and complex term the engine touches is a
 * subquotient described by two member masks: the kerneled set (numerator =
 * meet over it) and the merged set (denominator = join over it). Meets,
 * joins, and subquotients are memoized by mask.
 */
template <typename T>
class MemberSystem
{
public:
    using Mask = std::uint64_t;

    MemberSystem() = default;
    MemberSystem(TensorSpace space, std::vector<BlockedSubspace<T>> members)
        : space_(std::move(space)), members_(std::move(members))
    {
        if (members_.size() > 63)
            throw std::invalid_argument("member system limited to 63 members");
    }

    const TensorSpace& space() const { return space_; }
    int memberCount() const { return static_cast<int>(members_.size()); }
    const BlockedSubspace<T>& member(int i) const { return members_[i - 1]; }  // 1-based

    static Mask maskOf(const std::set<int>& I)
    {
        Mask m = 0;
        for (int i : I) m |= (Mask(1) << (i - 1));
        return m;
    }

    Mask fullMask() const { return (Mask(1) << memberCount()) - 1; }

    const BlockedSubspace<T>& meet(Mask mask)
    {
        auto it = meets_.find(mask);
        if (it != meets_.end()) return it->second;
        BlockedSubspace<T> val;
        if (mask == 0) {
            val = BlockedSubspace<T>::full(space_);
        } else {
            const Mask low = mask & (~mask + 1);
            const int idx = __builtin_ctzll(mask);
            val = intersect(meet(mask ^ low), members_[idx]);
        }
        return meets_.emplace(mask, std::move(val)).first->second;
    }

    const BlockedSubspace<T>& join(Mask mask)
    {
        auto it = joins_.find(mask);
        if (it != joins_.end()) return it->second;
        BlockedSubspace<T> val;
        if (mask == 0) {
            val = BlockedSubspace<T>::zero(space_);
        } else {
            const Mask low = mask & (~mask + 1);
            const int idx = __builtin_ctzll(mask);
            val = sum(join(mask ^ low), members_[idx]);
        }
        return joins_.emplace(mask, std::move(val)).first->second;
    }

    /// Subquotient meet(kerneled)/join(merged). Masks need not be disjoint in
    /// principle, but engine callers always pass disjoint ones.
    const BlockedSubquotient<T>& subq(Mask kerneled, Mask merged)
    {
        const auto key = std::make_pair(kerneled, merged);
        auto it = subqs_.find(key);
        if (it != subqs_.end()) return it->second;
        BlockedSubquotient<T> val(meet(kerneled), join(merged));
        return subqs_.emplace(key, std::move(val)).first->second;
    }

    int dimOf(Mask kerneled, Mask merged) { return subq(kerneled, merged).dim(); }

    /// Per-block matrices of the identity-induced map between two stored
    /// subquotients.
    std::vector<MatrixX<T>> inducedBlocks(const BlockedSubquotient<T>& from,
                                          const BlockedSubquotient<T>& to) const
    {
        std::vector<MatrixX<T>> out;
        for (int b = 0; b < from.blockCount(); ++b)
            out.push_back(inducedIdentityMap(from.block(b), to.block(b)));
        return out;
    }

private:
    TensorSpace space_;
    std::vector<BlockedSubspace<T>> members_;
    std::map<Mask, BlockedSubspace<T>> meets_, joins_;
    std::map<std::pair<Mask, Mask>, BlockedSubquotient<T>> subqs_;
};

/// Sparse rows of a pair subspace placed at adjacent slots (slotA, slotA+1)
/// of the tensor space, with identity on all other slots.
template <typename T>
std::vector<std::vector<std::pair<int, T>>>
placePairRows(const TensorSpace& sp, int slotA, const MatrixX<T>& pairBasis)
{
    const int nSlots = sp.slotCount();
    if (slotA < 0 || slotA + 1 >= nSlots)
        throw std::invalid_argument("placePairRows: slot out of range");
    const int dA = sp.slotDim(slotA);
    const int dB = sp.slotDim(slotA + 1);
    if (pairBasis.cols() != dA * dB)
        throw std::invalid_argument("placePairRows: pair ambient mismatch");

    // enumerate identity multi-indices over the other slots
    std::vector<int> others;
    for (int s = 0; s < nSlots; ++s)
        if (s != slotA && s != slotA + 1) others.push_back(s);
    int outer = 1;
    for (int s : others) outer *= sp.slotDim(s);

    std::vector<std::vector<std::pair<int, T>>> rows;
    rows.reserve(static_cast<size_t>(pairBasis.rows()) * outer);
    std::vector<int> multi(others.size(), 0);
    for (int o = 0; o < outer; ++o) {
        int base = 0;
        for (size_t k = 0; k < others.size(); ++k) base += multi[k] * sp.stride(others[k]);
        for (int r = 0; r < pairBasis.rows(); ++r) {
            std::vector<std::pair<int, T>> row;
            for (int ab = 0; ab < dA * dB; ++ab) {
                if (pairBasis(r, ab) == T(0)) continue;
                const int a = ab / dB, b = ab % dB;
                row.emplace_back(base + a * sp.stride(slotA) + b * sp.stride(slotA + 1),
                                 pairBasis(r, ab));
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
        for (int k = static_cast<int>(others.size()) - 1; k >= 0; --k) {
            if (++multi[k] < sp.slotDim(others[k])) break;
            multi[k] = 0;
        }
    }
    return rows;
}

/// Expand a blocked subspace back to dense global coordinates (test helper
/// and small-case interop with the plain lattice layer).
template <typename T>
Subspace<T> toGlobal(const TensorSpace& sp, const BlockedSubspace<T>& s)
{
    std::vector<std::vector<std::pair<int, T>>> rows;
    for (int b = 0; b < s.blockCount(); ++b) {
        const auto& coords = sp.blockCoords(b);
        const auto& basis = s.block(b).basis();
        for (int r = 0; r < basis.rows(); ++r) {
            std::vector<std::pair<int, T>> row;
            for (int c = 0; c < basis.cols(); ++c)
                if (basis(r, c) != T(0)) row.emplace_back(coords[c], basis(r, c));
            rows.push_back(std::move(row));
        }
    }
    MatrixX<T> m(static_cast<int>(rows.size()), sp.dim());
    m.setZero();
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [g, v] : rows[r]) m(static_cast<int>(r), g) = v;
    return Subspace<T>::span(m);
}

}  // namespace rk
