#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rk/schur.hpp"

namespace rk {

/**
 * Internal-degree-w strand of the two-sided bar construction
 * M (x) A_+^{(x)i} (x) N for the context's right module M and left module N
 * (use trivial modules for Tor(k, k)). Terms are the graded pieces
 * (M (x) A (x) N)_{(m, a_1..a_i, n)}; homological degree i corresponds to
 * cube grade e - i, where e = w - t - s.
 */
template <typename T>
struct BarStrand
{
    BlockedComplex<T> complex;
    int e = 0;  // number of degree-1 slots; bar degree i sits at grade e - i

    /// dim Tor_i(M, N)_w.
    int torDim(int i) const
    {
        if (i < 0 || i > e) return 0;
        const auto h = complex.homologyDims();
        const int grade = e - i;
        return grade < static_cast<int>(h.size()) ? h[grade] : 0;
    }
};

template <typename T>
BarStrand<T> barStrand(GradedContext<T>& ctx, int w)
{
    if (!ctx.hasRightModule() || !ctx.hasLeftModule())
        throw std::invalid_argument("barStrand needs both modules configured (use trivial)");
    const int t = ctx.rightModule().initialDegree;
    const int s = ctx.leftModule().initialDegree;
    const int e = w - t - s;
    if (e < 0) throw std::invalid_argument("strand below initial degrees");
    ctx.requireDegree(w);
    auto& sys = ctx.system(Variant::MAN, e);
    const int g = sys.memberCount();

    BarStrand<T> out;
    out.e = e;
    if (g == 0) {
        // single term M_t (x) N_s at bar degree 0
        const auto& sq = sys.subq(0, 0);
        BlockedComplex<T> cx;
        for (int b = 0; b < sq.blockCount(); ++b)
            cx.blocks.emplace_back(Direction::Cochain, std::vector<int>{sq.block(b).dim()},
                                   std::vector<MatrixX<T>>{});
        out.complex = std::move(cx);
        return out;
    }

    std::vector<std::vector<CubeTerm>> grades(e + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g); ++mask) {
        const int p = __builtin_popcountll(mask);
        if (p > e) continue;  // a bar term has at least two parts
        CubeTerm term;
        term.kerneled = 0;
        term.merged = mask;
        for (int i = 0; i < g; ++i)
            if (mask & (std::uint64_t(1) << i)) term.key.insert(i + 1);
        grades[p].push_back(std::move(term));
    }
    out.complex = cubeComplex(sys, Direction::Cochain, grades);
    return out;
}

/**
 * Priddy strand in internal degree w for the context's left module: the
 * augmented complex
 *   A_{e} (x) N_s <- ... <- A_{e-i} (x) S^{(1^i)}_{A,N} <- ... <- S^{(1^e)}_{A,N}
 * prepended by N_w. Exact in every strand iff N is Koszul.
 */
template <typename T>
struct PriddyStrand
{
    BlockedComplex<T> complex;  // chain: position 0 = N_w, position i+1 = term_i
    std::vector<int> generatorDims;  // dim S^{(1^i)}_{A,N} for i = 0..e
    bool exact = false;
};

template <typename T>
PriddyStrand<T> priddyStrand(GradedContext<T>& ctx, int w)
{
    if (!ctx.hasLeftModule())
        throw std::invalid_argument("priddyStrand needs a left module");
    const int s = ctx.leftModule().initialDegree;
    const int e = w - s;
    if (e < 0) throw std::invalid_argument("strand below the module's initial degree");
    ctx.requireDegree(w);
    auto& sys = ctx.system(Variant::AN, e);
    const int g = sys.memberCount();  // = e

    PriddyStrand<T> out;
    // masks per term: numerator = last i members, denominator = first e-i-1
    std::vector<std::pair<std::uint64_t, std::uint64_t>> specs;
    for (int i = 0; i <= e; ++i) {
        std::uint64_t ker = 0, mer = 0;
        for (int j = e - i + 1; j <= e; ++j) ker |= std::uint64_t(1) << (j - 1);
        for (int j = 1; j <= e - i - 1; ++j) mer |= std::uint64_t(1) << (j - 1);
        specs.emplace_back(ker, mer);
    }
    const std::uint64_t full = g > 0 ? sys.fullMask() : 0;

    const int nBlocks = sys.space().blockCount();
    BlockedComplex<T> cx;
    for (int b = 0; b < nBlocks; ++b) {
        std::vector<int> dims;
        dims.push_back(sys.subq(0, full).block(b).dim());  // N_w
        for (int i = 0; i <= e; ++i)
            dims.push_back(sys.subq(specs[i].first, specs[i].second).block(b).dim());
        std::vector<MatrixX<T>> diffs;
        // term_0 -> N_w
        diffs.push_back(inducedIdentityMap(sys.subq(specs[0].first, specs[0].second).block(b),
                                           sys.subq(0, full).block(b)));
        for (int i = 1; i <= e; ++i)
            diffs.push_back(
                inducedIdentityMap(sys.subq(specs[i].first, specs[i].second).block(b),
                                   sys.subq(specs[i - 1].first, specs[i - 1].second).block(b)));
        cx.blocks.emplace_back(Direction::Chain, std::move(dims), std::move(diffs));
    }
    out.complex = std::move(cx);
    for (int i = 0; i <= e; ++i) {
        if (i == 0) {
            out.generatorDims.push_back(ctx.leftModule().gens);
            continue;
        }
        std::vector<int> ones(i, 1);
        out.generatorDims.push_back(schur(ctx, Composition(ones), Variant::AN).dim);
    }
    auto h = out.complex.homologyDims();
    out.exact = true;
    for (int x : h)
        if (x != 0) out.exact = false;
    return out;
}

/// One Tor table entry with both provenances (-1 = not computed).
struct TorEntry
{
    int i = 0;
    int internalDegree = 0;
    int barDim = -1;
    int closedDim = -1;
};

struct TorTable
{
    std::vector<TorEntry> entries;
    bool closedFormCertified = false;

    bool agrees() const
    {
        for (const auto& en : entries) {
            const int b = en.barDim < 0 ? 0 : en.barDim;
            const int c = en.closedDim < 0 ? 0 : en.closedDim;
            if (en.barDim >= 0 && en.closedDim >= 0 && b != c) return false;
        }
        return true;
    }

    int dim(int i, int w) const
    {
        for (const auto& en : entries)
            if (en.i == i && en.internalDegree == w)
                return en.barDim >= 0 ? en.barDim : std::max(0, en.closedDim);
        return 0;
    }

    /// Total dim Tor_i across internal degrees.
    int dimTotal(int i) const
    {
        int d = 0;
        for (const auto& en : entries)
            if (en.i == i) d += en.barDim >= 0 ? en.barDim : std::max(0, en.closedDim);
        return d;
    }
};

/**
 * Tor dimension table for the context's (right module M, left module N):
 * bar-strand homology for every internal degree within the bound, plus the
 * closed form dim S^{(1^i)}_{M,A,N} placed at internal degree t + s + i when
 * `certified` is set (the caller vouches for Koszulness of A, M, N).
 */
template <typename T>
TorTable torDims(GradedContext<T>& ctx, int maxI, bool certified,
                 bool withBarStrands = true)
{
    const int t = ctx.rightModule().initialDegree;
    const int s = ctx.leftModule().initialDegree;
    TorTable table;
    table.closedFormCertified = certified;
    std::map<std::pair<int, int>, TorEntry> entries;
    if (withBarStrands) {
        for (int w = t + s; w <= ctx.degreeBound(); ++w) {
            BarStrand<T> strand = barStrand(ctx, w);
            for (int i = 0; i <= std::min(maxI, strand.e); ++i) {
                TorEntry en;
                en.i = i;
                en.internalDegree = w;
                en.barDim = strand.torDim(i);
                entries[{i, w}] = en;
            }
        }
    }
    if (certified) {
        for (int i = 0; i <= maxI; ++i) {
            const int w = t + s + i;
            if (w > ctx.degreeBound()) break;
            int d;
            if (i == 0) {
                d = ctx.rightModule().gens * ctx.leftModule().gens;
            } else {
                std::vector<int> ones(i, 1);
                d = schur(ctx, Composition(ones), Variant::MAN).dim;
            }
            auto& en = entries[{i, w}];
            en.i = i;
            en.internalDegree = w;
            en.closedDim = d;
        }
    }
    for (auto& [k, v] : entries) table.entries.push_back(v);
    return table;
}

/**
 * Ext table: Ext^i_A(M, N) for left modules M, N with N concentrated in a
 * single degree. Computed on the dual side as Tor_i(N^*, M) (the closed form
 * there is the lattice path; the bar strand is the independent cross-check).
 */
template <typename T>
TorTable extDims(const AlgebraPresentation<T>& algebra, const ModulePresentation<T>& M,
                 const ModulePresentation<T>& N, int maxI, bool certified, int degreeBound)
{
    if (M.side != Side::Left || N.side != Side::Left)
        throw std::invalid_argument("extDims expects left modules");
    GradedContext<T> ctx(algebra, degreeBound);
    ctx.setRightModule(gradedDualModule(algebra, N));
    ctx.setLeftModule(M);
    return torDims(ctx, maxI, certified);
}

enum class KoszulMethod { Distributive, StrandHomology, Both };

struct KoszulCertificate
{
    std::string target;
    int maxDegree = 0;
    KoszulMethod method = KoszulMethod::Both;
    std::vector<std::pair<int, bool>> verdictPerDegree;  // (degree, pass)
    bool pass = true;
    bool methodsAgree = true;
    std::string failureWitness;
};

namespace detail {

/// Blockwise three-term distributivity check over a member system.
template <typename T>
DistributivityCertificate checkDistributiveBlocked(MemberSystem<T>& sys)
{
    const int g = sys.memberCount();
    const int nBlocks = sys.space().blockCount();
    for (int b = 0; b < nBlocks; ++b) {
        std::vector<Subspace<T>> members;
        for (int i = 1; i <= g; ++i) members.push_back(sys.member(i).block(b));
        SubspaceCollection<T> coll(
            static_cast<int>(sys.space().blockCoords(b).size()), std::move(members));
        DistributivityCertificate cert = checkDistributive(coll);
        if (!cert.pass) return cert;
    }
    return {};
}

}  // namespace detail

/**
 * Koszulness certification for the algebra (or for the context's left module
 * when `forModule` is set): the distributivity route checks the relation
 * collections degree by degree; the strand route checks that every bar strand
 * within the bound has homology concentrated on the diagonal.
 */
template <typename T>
KoszulCertificate certifyKoszul(GradedContext<T>& ctx, int maxDegree, KoszulMethod method,
                                bool forModule = false)
{
    ctx.requireDegree(maxDegree);
    KoszulCertificate cert;
    cert.maxDegree = maxDegree;
    cert.method = method;
    cert.target = forModule ? ctx.leftModule().name : ctx.algebra().name;

    const int startDegree = forModule ? 1 : 2;
    std::vector<bool> distr, strand;

    if (method == KoszulMethod::Distributive || method == KoszulMethod::Both) {
        for (int n = startDegree; n <= maxDegree; ++n) {
            const int e = forModule ? n : n;
            auto& sys = forModule ? ctx.system(Variant::AN, e) : ctx.system(Variant::A, e);
            DistributivityCertificate c = detail::checkDistributiveBlocked(sys);
            distr.push_back(c.pass);
            if (!c.pass && cert.failureWitness.empty()) {
                std::string iStr;
                for (int i : c.failingI) iStr += (iStr.empty() ? "" : ",") + std::to_string(i);
                cert.failureWitness = "degree " + std::to_string(n) + " I={" + iStr +
                                      "} j=" + std::to_string(c.failingJ) +
                                      " h=" + std::to_string(c.homologyDim);
            }
        }
    }
    if (method == KoszulMethod::StrandHomology || method == KoszulMethod::Both) {
        GradedContext<T> strandCtx(ctx.algebra(), ctx.degreeBound());
        strandCtx.setRightModule(builtin::trivialModule(ctx.algebra(), Side::Right));
        if (forModule)
            strandCtx.setLeftModule(ctx.leftModule());
        else
            strandCtx.setLeftModule(builtin::trivialModule(ctx.algebra(), Side::Left));
        const int s = forModule ? ctx.leftModule().initialDegree : 0;
        for (int n = startDegree; n <= maxDegree; ++n) {
            BarStrand<T> st = barStrand(strandCtx, n + s);
            auto h = st.complex.homologyDims();
            bool ok = true;
            for (size_t p = 1; p < h.size(); ++p)
                if (h[p] != 0) ok = false;
            strand.push_back(ok);
            if (!ok && cert.failureWitness.empty())
                cert.failureWitness = "off-diagonal Tor in internal degree " + std::to_string(n + s);
        }
    }

    const size_t count = std::max(distr.size(), strand.size());
    for (size_t k = 0; k < count; ++k) {
        const int degree = startDegree + static_cast<int>(k);
        bool ok = true;
        if (k < distr.size()) ok = ok && distr[k];
        if (k < strand.size()) ok = ok && strand[k];
        cert.verdictPerDegree.emplace_back(degree, ok);
        if (!ok) cert.pass = false;
        if (method == KoszulMethod::Both && k < distr.size() && k < strand.size() &&
            distr[k] != strand[k])
            cert.methodsAgree = false;
    }
    return cert;
}

}  // namespace rk
