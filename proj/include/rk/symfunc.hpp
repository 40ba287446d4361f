#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rk/composition.hpp"
#include "rk/scalar.hpp"
#include "rk/tensorspace.hpp"

namespace rk {

/**
 * Truncated polynomials in a list of variable alphabets. Monomials are
 * exponent vectors over the concatenated variables; any monomial whose total
 * degree within some alphabet exceeds that alphabet's cap is dropped eagerly.
 */
template <typename T>
class TruncatedPoly
{
public:
    TruncatedPoly() = default;
    TruncatedPoly(std::vector<int> alphabetSizes, std::vector<int> caps)
        : sizes_(std::move(alphabetSizes)), caps_(std::move(caps))
    {
        if (sizes_.size() != caps_.size())
            throw std::invalid_argument("one cap per alphabet required");
        total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
    }

    const std::vector<int>& alphabetSizes() const { return sizes_; }
    const std::vector<int>& caps() const { return caps_; }
    int varCount() const { return total_; }

    static TruncatedPoly zero(std::vector<int> sizes, std::vector<int> caps)
    {
        return TruncatedPoly(std::move(sizes), std::move(caps));
    }

    static TruncatedPoly one(std::vector<int> sizes, std::vector<int> caps)
    {
        TruncatedPoly p(std::move(sizes), std::move(caps));
        p.coeffs_[std::vector<int>(p.total_, 0)] = T(1);
        return p;
    }

    bool sameRing(const TruncatedPoly& o) const
    {
        return sizes_ == o.sizes_ && caps_ == o.caps_;
    }

    void add(const std::vector<int>& expo, const T& c)
    {
        if (!withinCaps(expo) || c == T(0)) return;
        auto it = coeffs_.find(expo);
        if (it == coeffs_.end()) {
            coeffs_[expo] = c;
        } else {
            it->second += c;
            if (it->second == T(0)) coeffs_.erase(it);
        }
    }

    const std::map<std::vector<int>, T>& coeffs() const { return coeffs_; }

    TruncatedPoly operator+(const TruncatedPoly& o) const
    {
        TruncatedPoly out = *this;
        for (const auto& [e, c] : o.coeffs_) out.add(e, c);
        return out;
    }

    TruncatedPoly operator-(const TruncatedPoly& o) const
    {
        TruncatedPoly out = *this;
        for (const auto& [e, c] : o.coeffs_) out.add(e, -c);
        return out;
    }

    TruncatedPoly operator*(const TruncatedPoly& o) const
    {
        TruncatedPoly out(sizes_, caps_);
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_) {
                std::vector<int> e(total_);
                for (int i = 0; i < total_; ++i) e[i] = e1[i] + e2[i];
                out.add(e, c1 * c2);
            }
        return out;
    }

    TruncatedPoly scaled(const T& c) const
    {
        TruncatedPoly out(sizes_, caps_);
        for (const auto& [e, x] : coeffs_) out.add(e, c * x);
        return out;
    }

    bool operator==(const TruncatedPoly& o) const
    {
        return sameRing(o) && coeffs_ == o.coeffs_;
    }
    bool operator!=(const TruncatedPoly& o) const { return !(*this == o); }

    /// Canonical sorted-monomial text form for golden comparisons.
    std::string str() const
    {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            if (!out.empty()) out += " + ";
            out += toString(c);
            for (int i = 0; i < total_; ++i) {
                if (e[i] == 0) continue;
                out += "*x" + std::to_string(i + 1);
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

private:
    bool withinCaps(const std::vector<int>& e) const
    {
        int off = 0;
        for (size_t a = 0; a < sizes_.size(); ++a) {
            int deg = 0;
            for (int i = 0; i < sizes_[a]; ++i) deg += e[off + i];
            if (deg > caps_[a]) return false;
            off += sizes_[a];
        }
        return true;
    }

    std::vector<int> sizes_, caps_;
    int total_ = 0;
    std::map<std::vector<int>, T> coeffs_;
};

/// Complete homogeneous polynomial h_d in the variables of one alphabet.
template <typename T>
TruncatedPoly<T> h(int d, int alphabet, const std::vector<int>& sizes,
                   const std::vector<int>& caps)
{
    TruncatedPoly<T> out(sizes, caps);
    if (d < 0) return out;
    if (d > caps[alphabet]) return out;
    int off = 0;
    for (int a = 0; a < alphabet; ++a) off += sizes[a];
    const int m = sizes[alphabet];
    const int total = out.varCount();
    // all weak compositions of d into m parts
    std::vector<int> expo(m, 0);
    const std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == m - 1) {
            expo[pos] = remaining;
            std::vector<int> e(total, 0);
            for (int i = 0; i < m; ++i) e[off + i] = expo[i];
            out.add(e, T(1));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            expo[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, d);
    return out;
}

/// Ribbon Schur polynomial via the coarsening inclusion-exclusion
/// r_alpha = sum over coarsenings beta of (-1)^{l(a)-l(b)} h_beta.
template <typename T>
TruncatedPoly<T> ribbon(const Composition& alpha, int alphabet, const std::vector<int>& sizes,
                        const std::vector<int>& caps)
{
    TruncatedPoly<T> out(sizes, caps);
    if (alpha.empty()) return TruncatedPoly<T>::one(sizes, caps);
    for (const auto& [beta, sign] : coarsenings(alpha)) {
        TruncatedPoly<T> prod = TruncatedPoly<T>::one(sizes, caps);
        for (int p : beta.parts()) prod = prod * h<T>(p, alphabet, sizes, caps);
        out = sign > 0 ? out + prod : out - prod;
    }
    return out;
}

/// Character (weight generating function) of per-weight dimensions, as a
/// polynomial in one concatenated alphabet list.
template <typename T>
TruncatedPoly<T> characterPoly(const std::vector<std::pair<Weight, int>>& weightDims,
                               const std::vector<int>& sizes, const std::vector<int>& caps)
{
    TruncatedPoly<T> out(sizes, caps);
    for (const auto& [w, d] : weightDims) {
        std::vector<int> e(out.varCount(), 0);
        if (static_cast<int>(w.size()) != out.varCount())
            throw std::invalid_argument("weight length does not match the variable count");
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 0) throw std::invalid_argument("negative weight in character");
            e[i] = w[i];
        }
        out.add(e, T(d));
    }
    return out;
}

struct IdentityVerdict
{
    bool holds = false;
    std::string lhs, rhs;
};

/**
 * The Segre character identity: with one alphabet per factor,
 *   prod_k h_{d + alpha_k}(x^k)
 *     = sum_{i=0}^{d} (-1)^{i} h_{(d-i)^n} sum_{(I_1..I_n)}
 *         prod_k r_{sigma_{I_k}((alpha_k).(1^i))}(x^k),
 * where the I_k range over subsets of the i merge boundaries of the hook
 * composition (alpha_k, 1, ..., 1) with empty common intersection. This is
 * the alternating-sum-of-Tor expansion of the Segre truncation's character:
 * the level-i tuples are the filtration factors of Tor_i, with boundary 1
 * the module boundary. At n = 1 it reduces to the classical identity
 * h_{d+a} = sum_i (-1)^i h_{d-i} s_{(a,1^i)}.
 */
template <typename T>
IdentityVerdict verifySegreIdentity(int n, int d, const std::vector<int>& alphaParts,
                                    int varsPerAlphabet, int cap)
{
    if (static_cast<int>(alphaParts.size()) != n)
        throw std::invalid_argument("need one alpha part per factor");
    std::vector<int> sizes(n, varsPerAlphabet), caps(n, cap);

    TruncatedPoly<T> lhs = TruncatedPoly<T>::one(sizes, caps);
    for (int k = 0; k < n; ++k) lhs = lhs * h<T>(d + alphaParts[k], k, sizes, caps);

    TruncatedPoly<T> rhs(sizes, caps);
    for (int i = 0; i <= d; ++i) {
        const T sign = (i % 2 == 0) ? T(1) : T(-1);
        for (const auto& tuple : emptyIntersectionTuples(n, i + 1)) {
            TruncatedPoly<T> prod = TruncatedPoly<T>::one(sizes, caps);
            for (int k = 0; k < n; ++k) {
                std::vector<Composition> blocks{Composition{alphaParts[k]}};
                for (int q = 0; q < i; ++q) blocks.push_back(Composition{1});
                const Composition merged =
                    sigma(PartitionedComposition(blocks), tuple[k]).underlying();
                prod = prod * h<T>(d - i, k, sizes, caps);
                prod = prod * ribbon<T>(merged, k, sizes, caps);
            }
            rhs = rhs + prod.scaled(sign);
        }
    }
    IdentityVerdict v;
    v.holds = lhs == rhs;
    v.lhs = lhs.str();
    v.rhs = rhs.str();
    return v;
}

/**
 * Polynomial shadow of the Hamel-Goulden complex: the alternating sum over
 * I of the products of component ribbons of mu_I(alpha) equals r_alpha.
 */
template <typename T>
IdentityVerdict verifyHGIdentity(const PartitionedComposition& alpha, int vars, int cap)
{
    std::vector<int> sizes{vars}, caps{cap};
    const int l = alpha.blockCount();
    TruncatedPoly<T> sum(sizes, caps);
    for (const auto& I : allSubsets(l)) {
        TruncatedPoly<T> prod = TruncatedPoly<T>::one(sizes, caps);
        for (const Composition& comp : mu(alpha, I))
            prod = prod * ribbon<T>(comp, 0, sizes, caps);
        sum = (I.size() % 2 == 0) ? sum + prod : sum - prod;
    }
    TruncatedPoly<T> target = ribbon<T>(alpha.underlying(), 0, sizes, caps);
    IdentityVerdict v;
    v.holds = sum == target;
    v.lhs = sum.str();
    v.rhs = target.str();
    return v;
}

}  // namespace rk
