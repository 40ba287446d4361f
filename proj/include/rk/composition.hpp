#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rk {

/**
 * A composition: tuple of positive integers. The empty tuple is the
 * distinguished empty composition. Parts are stored bottom-row-first in the
 * associated ribbon diagram.
 */
class Composition
{
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[i]; }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    /// Parse "3,1,2"; the empty string is the empty composition.
    static Composition parse(const std::string& s)
    {
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            parts.push_back(std::stoi(tok));
        }
        return Composition(std::move(parts));
    }

    std::string str() const
    {
        std::string out;
        for (int i = 0; i < length(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    std::vector<int> parts_;
};

inline Composition concat(const Composition& a, const Composition& b)
{
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(p));
}

/// Merge the last part of a with the first part of b.
inline Composition nearConcat(const Composition& a, const Composition& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("near-concatenation needs nonempty compositions");
    std::vector<int> p = a.parts();
    p.back() += b[0];
    p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(p));
}

inline Composition rescale(const Composition& a, int d)
{
    if (d <= 0) throw std::invalid_argument("rescale needs d >= 1");
    std::vector<int> p = a.parts();
    for (int& x : p) x *= d;
    return Composition(std::move(p));
}

/// Proper partial sums alpha_1, alpha_1+alpha_2, ..., excluding |alpha|.
inline std::vector<int> properPartialSums(const Composition& a)
{
    std::vector<int> out;
    int acc = 0;
    for (int i = 0; i + 1 < a.length(); ++i) {
        acc += a[i];
        out.push_back(acc);
    }
    return out;
}

/**
 * The poset isomorphism phi: 2^[n-1] -> C(n). The subset I is the set of
 * merged adjacent positions; its complement in [n-1] is the set of proper
 * partial sums of phi(I).
 */
inline Composition phi(const std::set<int>& mergedPositions, int n)
{
    if (n == 0) return Composition();
    for (int i : mergedPositions)
        if (i < 1 || i > n - 1)
            throw std::invalid_argument("phi: subset not contained in [n-1]");
    std::vector<int> parts;
    int current = 1;
    for (int pos = 1; pos <= n - 1; ++pos) {
        if (mergedPositions.count(pos)) {
            ++current;
        } else {
            parts.push_back(current);
            current = 1;
        }
    }
    parts.push_back(current);
    return Composition(std::move(parts));
}

inline std::set<int> phiInverse(const Composition& a)
{
    const int n = a.weight();
    std::set<int> cuts;
    for (int s : properPartialSums(a)) cuts.insert(s);
    std::set<int> merged;
    for (int i = 1; i <= n - 1; ++i)
        if (!cuts.count(i)) merged.insert(i);
    return merged;
}

/**
 * Transpose of the ribbon diagram: conjugate the skew shape. Concretely
 * phi-complement followed by reversal, so that (3,1,1,2,4)^t = (1,1,1,2,4,1,1)
 * and (a.b)^t = b^t ⊙ a^t.
 */
inline Composition transpose(const Composition& a)
{
    if (a.empty()) return a;
    const int n = a.weight();
    std::set<int> merged = phiInverse(a);
    std::set<int> complement;
    for (int i = 1; i <= n - 1; ++i)
        if (!merged.count(i)) complement.insert(i);
    Composition c = phi(complement, n);
    std::vector<int> rev(c.parts().rbegin(), c.parts().rend());
    return Composition(std::move(rev));
}

/// All coarsenings (merge any subset of adjacent boundaries), with sign
/// (-1)^{l(a)-l(b)}.
inline std::vector<std::pair<Composition, int>> coarsenings(const Composition& a)
{
    const int cuts = a.length() - 1;
    std::vector<std::pair<Composition, int>> out;
    for (std::uint32_t mask = 0; mask < (1u << cuts); ++mask) {
        std::vector<int> parts;
        int current = a[0];
        for (int i = 0; i < cuts; ++i) {
            if (mask & (1u << i)) {
                current += a[i + 1];
            } else {
                parts.push_back(current);
                current = a[i + 1];
            }
        }
        parts.push_back(current);
        out.emplace_back(Composition(std::move(parts)),
                         (__builtin_popcount(mask) % 2 == 0) ? 1 : -1);
    }
    return out;
}

/// Single-merge coarsenings (the covers in the refinement poset).
inline std::vector<Composition> covers(const Composition& a)
{
    std::vector<Composition> out;
    for (int i = 0; i + 1 < a.length(); ++i) {
        std::vector<int> parts = a.parts();
        parts[i] += parts[i + 1];
        parts.erase(parts.begin() + i + 1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// Sign of the permutation reordering (j, I) ascending: (-1)^{#{i in I : i < j}}.
inline int sgn(int j, const std::set<int>& I)
{
    if (I.count(j)) throw std::invalid_argument("sgn(j, I) requires j not in I");
    int inversions = 0;
    for (int i : I)
        if (i < j) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// j-th degeneracy map [n] -> [n-1]: collapse j and j+1.
inline int degeneracy(int j, int i) { return i <= j ? i : i - 1; }

/// j-th face map [n-1] -> [n]: skip j.
inline int face(int j, int i) { return i < j ? i : i + 1; }

/// Apply the degeneracy s_j elementwise to an index set not containing... the
/// standard relabeling after deleting index j from [n].
inline std::set<int> degeneracySet(int j, const std::set<int>& I)
{
    std::set<int> out;
    for (int i : I) out.insert(degeneracy(j, i));
    return out;
}

/**
 * A partitioned composition: blocks p_1, ..., p_l, each a nonempty
 * composition; their concatenation is the underlying composition.
 */
class PartitionedComposition
{
public:
    PartitionedComposition() = default;
    explicit PartitionedComposition(std::vector<Composition> blocks)
        : blocks_(std::move(blocks))
    {
        for (const auto& b : blocks_)
            if (b.empty())
                throw std::invalid_argument("partitioned composition blocks must be nonempty");
    }

    /// Singleton-block partition of a plain composition.
    static PartitionedComposition singletons(const Composition& a)
    {
        std::vector<Composition> blocks;
        for (int p : a.parts()) blocks.push_back(Composition({p}));
        return PartitionedComposition(std::move(blocks));
    }

    /// Parse "2|2,1|4|3" with '|' as block separator.
    static PartitionedComposition parse(const std::string& s)
    {
        std::vector<Composition> blocks;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '|'))
            if (!tok.empty()) blocks.push_back(Composition::parse(tok));
        return PartitionedComposition(std::move(blocks));
    }

    std::string str() const
    {
        std::string out;
        for (int i = 0; i < blockCount(); ++i) {
            if (i) out += '|';
            out += blocks_[i].str();
        }
        return out;
    }

    int blockCount() const { return static_cast<int>(blocks_.size()); }
    const Composition& block(int i) const { return blocks_[i]; }
    const std::vector<Composition>& blocks() const { return blocks_; }

    Composition underlying() const
    {
        Composition out;
        for (const auto& b : blocks_) out = concat(out, b);
        return out;
    }

    bool operator==(const PartitionedComposition& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<Composition> blocks_;
};

/// A possibly disconnected ribbon: list of composition components.
using RibbonDiagramList = std::vector<Composition>;

/// sigma_I: near-concatenate blocks across each boundary in I. The result is
/// the (l - |I|)-block partitioned composition.
inline PartitionedComposition sigma(const PartitionedComposition& a, const std::set<int>& I)
{
    const int l = a.blockCount();
    for (int i : I)
        if (i < 1 || i > l - 1) throw std::invalid_argument("sigma: index out of range");
    std::vector<Composition> blocks;
    Composition current = a.block(0);
    for (int j = 1; j < l; ++j) {
        if (I.count(j)) {
            current = nearConcat(current, a.block(j));
        } else {
            blocks.push_back(current);
            current = a.block(j);
        }
    }
    blocks.push_back(current);
    return PartitionedComposition(std::move(blocks));
}

/// nu_I: disconnect at each boundary in I; the components between cuts are
/// the concatenations of the intervening blocks.
inline RibbonDiagramList nu(const PartitionedComposition& a, const std::set<int>& I)
{
    const int l = a.blockCount();
    for (int i : I)
        if (i < 1 || i > l - 1) throw std::invalid_argument("nu: index out of range");
    RibbonDiagramList out;
    Composition current = a.block(0);
    for (int j = 1; j < l; ++j) {
        if (I.count(j)) {
            out.push_back(current);
            current = a.block(j);
        } else {
            current = concat(current, a.block(j));
        }
    }
    out.push_back(current);
    return out;
}

/// mu_I: near-concatenate across I, then disconnect all remaining boundaries.
inline RibbonDiagramList mu(const PartitionedComposition& a, const std::set<int>& I)
{
    const int l = a.blockCount();
    RibbonDiagramList out;
    Composition current = a.block(0);
    for (int j = 1; j < l; ++j) {
        if (I.count(j)) {
            current = nearConcat(current, a.block(j));
        } else {
            out.push_back(current);
            current = a.block(j);
        }
    }
    out.push_back(current);
    return out;
}

/// All subsets of [l-1] in binary-counter order (bit i-1 <-> element i).
inline std::vector<std::set<int>> allSubsets(int l)
{
    const int n = l - 1;
    std::vector<std::set<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

/**
 * Enumerate all tuples (I_1, ..., I_n) of subsets of [l-1] with empty common
 * intersection, in binary-counter order on the concatenated characteristic
 * vectors (I_1 least significant). Count is (2^n - 1)^{l-1}.
 */
inline std::vector<std::vector<std::set<int>>> emptyIntersectionTuples(int n, int l)
{
    if (n < 1 || l < 1) throw std::invalid_argument("emptyIntersectionTuples: n, l >= 1");
    const int bits = n * (l - 1);
    std::vector<std::vector<std::set<int>>> out;
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        std::vector<std::set<int>> tuple(n);
        bool ok = true;
        for (int pos = 1; pos <= l - 1 && ok; ++pos) {
            bool common = true;
            for (int k = 0; k < n; ++k) {
                if (mask & (1ull << (k * (l - 1) + pos - 1)))
                    tuple[k].insert(pos);
                else
                    common = false;
            }
            if (common) ok = false;
        }
        if (ok) out.push_back(std::move(tuple));
    }
    return out;
}

/// All compositions of d (2^{d-1} of them), refinement-finest first in the
/// binary-counter order of merged-position sets.
inline std::vector<Composition> allCompositions(int d)
{
    if (d == 0) return {Composition()};
    std::vector<Composition> out;
    for (std::uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::set<int> merged;
        for (int i = 0; i < d - 1; ++i)
            if (mask & (1u << i)) merged.insert(i + 1);
        out.push_back(phi(merged, d));
    }
    return out;
}

}  // namespace rk
