#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rk/composition.hpp"
#include "rk/cube.hpp"
#include "rk/lattice.hpp"
#include "rk/tensorspace.hpp"

namespace rk {

enum class Side { Left, Right };

/**
 * A quadratic algebra presentation T(V)/(Q2): generator count, the relation
 * subspace Q2 in V (x) V (lexicographic pair coordinates, leftmost factor
 * most significant), and optional torus weights per generator.
 */
template <typename T>
struct AlgebraPresentation
{
    std::string name;
    int gens = 0;
    Subspace<T> relations;           // ambient gens*gens
    std::vector<Weight> weights;     // empty = unweighted; else one per generator

    bool weighted() const { return !weights.empty(); }
};

/**
 * A quadratic module presentation over an algebra: side, initial degree t,
 * generator count g = dim M_t, relation subspace Q^M_{t+1} inside
 * V (x) M_t (left) or M_t (x) V (right).
 */
template <typename T>
struct ModulePresentation
{
    std::string name;
    Side side = Side::Left;
    int initialDegree = 0;
    int gens = 1;
    Subspace<T> relations;           // ambient m*g (left) or g*m (right)
    std::vector<Weight> weights;     // per module generator

    bool weighted() const { return !weights.empty(); }
};

namespace builtin {

template <typename T>
std::vector<Weight> standardWeights(int m)
{
    std::vector<Weight> w(m, Weight(m, 0));
    for (int i = 0; i < m; ++i) w[i][i] = 1;
    return w;
}

/// Symmetric algebra S(V): Q2 spanned by e_i (x) e_j - e_j (x) e_i.
template <typename T>
AlgebraPresentation<T> symmetricAlgebra(int m)
{
    MatrixX<T> rows(m * (m - 1) / 2, m * m);
    rows.setZero();
    int r = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            rows(r, i * m + j) = T(1);
            rows(r, j * m + i) = T(-1);
            ++r;
        }
    return {"sym" + std::to_string(m), m, Subspace<T>::span(rows), standardWeights<T>(m)};
}

/// Exterior algebra: Q2 spanned by squares and symmetrized pairs.
template <typename T>
AlgebraPresentation<T> exteriorAlgebra(int m)
{
    MatrixX<T> rows(m * (m + 1) / 2, m * m);
    rows.setZero();
    int r = 0;
    for (int i = 0; i < m; ++i) {
        rows(r++, i * m + i) = T(1);
        for (int j = i + 1; j < m; ++j) {
            rows(r, i * m + j) = T(1);
            rows(r, j * m + i) = T(1);
            ++r;
        }
    }
    return {"ext" + std::to_string(m), m, Subspace<T>::span(rows), standardWeights<T>(m)};
}

/// Tensor algebra: no relations.
template <typename T>
AlgebraPresentation<T> tensorAlgebra(int m)
{
    return {"tensor" + std::to_string(m), m, Subspace<T>::zero(m * m), standardWeights<T>(m)};
}

/// Trivial module k (rank `gens`) in a single degree: every product vanishes.
template <typename T>
ModulePresentation<T> trivialModule(const AlgebraPresentation<T>& a, Side side, int degree = 0,
                                    int gens = 1)
{
    ModulePresentation<T> m;
    m.name = "trivial";
    m.side = side;
    m.initialDegree = degree;
    m.gens = gens;
    m.relations = Subspace<T>::full(a.gens * gens);
    if (a.weighted()) m.weights.assign(gens, Weight(a.weights.front().size(), 0));
    return m;
}

/// Free module of rank `gens` generated in one degree: no relations.
template <typename T>
ModulePresentation<T> freeModule(const AlgebraPresentation<T>& a, Side side, int degree = 0,
                                 int gens = 1)
{
    ModulePresentation<T> m;
    m.name = "free";
    m.side = side;
    m.initialDegree = degree;
    m.gens = gens;
    m.relations = Subspace<T>::zero(a.gens * gens);
    if (a.weighted()) m.weights.assign(gens, Weight(a.weights.front().size(), 0));
    return m;
}

}  // namespace builtin

/// Quadratic dual: generators V*, relations the annihilator of Q2 under the
/// untwisted pairing <f (x) g, v (x) w> = f(v) g(w). Weights negate.
template <typename T>
AlgebraPresentation<T> quadraticDual(const AlgebraPresentation<T>& a)
{
    AlgebraPresentation<T> d;
    d.name = a.name + "!";
    d.gens = a.gens;
    d.relations = annihilator(a.relations);
    for (const auto& w : a.weights) {
        Weight neg(w.size());
        for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        d.weights.push_back(std::move(neg));
    }
    return d;
}

/// Module quadratic dual: side flips, relation space is the annihilator of
/// Q^M_{t+1} with the two tensor slots swapped to match the flipped side.
template <typename T>
ModulePresentation<T> moduleDual(const AlgebraPresentation<T>& a, const ModulePresentation<T>& m)
{
    ModulePresentation<T> d;
    d.name = m.name + "!";
    d.side = m.side == Side::Left ? Side::Right : Side::Left;
    d.initialDegree = m.initialDegree;
    d.gens = m.gens;
    const Subspace<T> ann = annihilator(m.relations);
    // swap coordinates (i, j) -> (j, i) between the V-slot and module slot
    const int dA = m.side == Side::Left ? a.gens : m.gens;   // first slot dim of Q^M ambient
    const int dB = m.side == Side::Left ? m.gens : a.gens;
    MatrixX<T> swapped(ann.dim(), dA * dB);
    swapped.setZero();
    for (int r = 0; r < ann.dim(); ++r)
        for (int i = 0; i < dA; ++i)
            for (int j = 0; j < dB; ++j)
                swapped(r, j * dA + i) = ann.basis()(r, i * dB + j);
    d.relations = Subspace<T>::span(swapped);
    for (const auto& w : m.weights) {
        Weight neg(w.size());
        for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        d.weights.push_back(std::move(neg));
    }
    return d;
}

/// Graded dual of a module concentrated in a single degree (the only case the
/// engine needs): flips the side, keeps the degree, dualizes the relation
/// space coordinatewise.
template <typename T>
ModulePresentation<T> gradedDualModule(const AlgebraPresentation<T>& a,
                                       const ModulePresentation<T>& m)
{
    const bool concentrated = m.relations.dim() == a.gens * m.gens;
    if (!concentrated)
        throw std::invalid_argument(
            "gradedDualModule: module must be concentrated in a single degree");
    ModulePresentation<T> d = m;
    d.name = m.name + "*";
    d.side = m.side == Side::Left ? Side::Right : Side::Left;
    d.relations = Subspace<T>::full(a.gens * m.gens);
    return d;
}

enum class Variant { A, AN, MA, MAN };

inline bool variantHasM(Variant v) { return v == Variant::MA || v == Variant::MAN; }
inline bool variantHasN(Variant v) { return v == Variant::AN || v == Variant::MAN; }

/**
 * The graded computation context: an algebra, optional left module N and
 * right module M, a degree bound, and memoized member systems per (variant,
 * V-slot count). Every graded piece and Schur-type object is a masked
 * subquotient of one of these systems.
 */
template <typename T>
class GradedContext
{
public:
    explicit GradedContext(AlgebraPresentation<T> algebra, int degreeBound = 7)
        : alg_(std::move(algebra)), bound_(degreeBound)
    {
        if (bound_ < 1) throw std::invalid_argument("degree bound must be >= 1");
    }

    void setLeftModule(ModulePresentation<T> n)
    {
        if (n.side != Side::Left) throw std::invalid_argument("left module expected");
        left_ = std::move(n);
        systems_.clear();
    }
    void setRightModule(ModulePresentation<T> m)
    {
        if (m.side != Side::Right) throw std::invalid_argument("right module expected");
        right_ = std::move(m);
        systems_.clear();
    }

    const AlgebraPresentation<T>& algebra() const { return alg_; }
    const ModulePresentation<T>& leftModule() const { return *left_; }
    const ModulePresentation<T>& rightModule() const { return *right_; }
    bool hasLeftModule() const { return left_.has_value(); }
    bool hasRightModule() const { return right_.has_value(); }
    int degreeBound() const { return bound_; }

    void requireDegree(int w) const
    {
        if (w > bound_)
            throw std::out_of_range("degree " + std::to_string(w) +
                                    " exceeds configured bound " + std::to_string(bound_));
        if (w < 0) throw std::out_of_range("negative degree");
    }

    /// Member system for `e` algebra-degree-1 slots in the given variant.
    MemberSystem<T>& system(Variant v, int e)
    {
        std::scoped_lock lock(*mu_);
        const auto key = std::make_pair(v, e);
        auto it = systems_.find(key);
        if (it != systems_.end()) return *it->second;

        auto sys = std::make_unique<MemberSystem<T>>(buildSystem(v, e));
        return *systems_.emplace(key, std::move(sys)).first->second;
    }

    /// Total internal degree of the system ambient (module degrees included).
    int ambientDegree(Variant v, int e) const
    {
        int w = e;
        if (variantHasM(v)) w += right_->initialDegree;
        if (variantHasN(v)) w += left_->initialDegree;
        return w;
    }

    /**
     * The full composition (endpoint degrees attached) for a Schur request.
     * For variants with modules the module part enters at its initial degree.
     */
    std::vector<int> fullComposition(Variant v, const Composition& alpha) const
    {
        std::vector<int> parts;
        if (variantHasM(v)) parts.push_back(right_->initialDegree);
        for (int p : alpha.parts()) parts.push_back(p);
        if (variantHasN(v)) parts.push_back(left_->initialDegree);
        return parts;
    }

    /**
     * Gap positions (1-based member indices) cut by a full composition.
     * Parts walk the slot layout [M?][V x e][N?]; a cut is recorded after
     * every part except the last.
     */
    std::set<int> cutPositions(Variant v, const std::vector<int>& fullParts, int e) const
    {
        const int t = variantHasM(v) ? right_->initialDegree : 0;
        const int s = variantHasN(v) ? left_->initialDegree : 0;
        int total = 0;
        for (int p : fullParts) total += p;
        if (total != e + t + s)
            throw std::invalid_argument("composition degree does not match slot count");

        std::set<int> cuts;
        int unitsConsumed = 0;  // units: [M?] + e V-units + [N?]
        for (size_t i = 0; i + 1 < fullParts.size(); ++i) {
            int p = fullParts[i];
            if (i == 0 && variantHasM(v)) {
                if (p < t) throw std::invalid_argument("first part below module degree");
                unitsConsumed += 1 + (p - t);
            } else {
                unitsConsumed += p;
            }
            cuts.insert(unitsConsumed);
        }
        // validate the last part
        if (!fullParts.empty()) {
            const int last = fullParts.back();
            const int totalUnits = e + (variantHasM(v) ? 1 : 0) + (variantHasN(v) ? 1 : 0);
            int need = totalUnits - unitsConsumed;
            const int lastUnits = variantHasN(v) ? 1 + (last - s) : last;
            if (fullParts.size() == 1 && variantHasM(v)) {
                // single part absorbing M as well
                if (variantHasN(v)) {
                    if (1 + (last - t - s) + 1 != need)
                        throw std::invalid_argument("composition does not fill the layout");
                } else if (1 + (last - t) != need) {
                    throw std::invalid_argument("composition does not fill the layout");
                }
            } else if (lastUnits != need) {
                throw std::invalid_argument("composition does not fill the layout");
            }
        }
        return cuts;
    }

    std::uint64_t maskOf(const std::set<int>& I) const { return MemberSystem<T>::maskOf(I); }

    /// kerneled/merged masks of the graded piece (cuts free) for a full
    /// composition.
    std::pair<std::uint64_t, std::uint64_t> gradedPieceMasks(Variant v,
                                                             const std::vector<int>& fullParts,
                                                             int e) const
    {
        const auto cuts = cutPositions(v, fullParts, e);
        const int g = memberCountFor(v, e);
        std::uint64_t merged = 0;
        for (int i = 1; i <= g; ++i)
            if (!cuts.count(i)) merged |= (std::uint64_t(1) << (i - 1));
        return {0, merged};
    }

    /// kerneled/merged masks of the Schur module (cuts kerneled).
    std::pair<std::uint64_t, std::uint64_t> schurMasks(Variant v,
                                                       const std::vector<int>& fullParts,
                                                       int e) const
    {
        const auto cuts = cutPositions(v, fullParts, e);
        const int g = memberCountFor(v, e);
        std::uint64_t kerneled = 0, merged = 0;
        for (int i = 1; i <= g; ++i) {
            if (cuts.count(i)) kerneled |= (std::uint64_t(1) << (i - 1));
            else merged |= (std::uint64_t(1) << (i - 1));
        }
        return {kerneled, merged};
    }

    int memberCountFor(Variant v, int e) const
    {
        int g = std::max(0, e - 1);
        if (variantHasM(v) && e > 0) g += 1;
        if (variantHasN(v) && e > 0) g += 1;
        if (variantHasM(v) && variantHasN(v) && e == 0) g = 0;  // M_t (x) N_s alone
        return g;
    }

    /// Degree-w piece dimension of the algebra (variant A).
    int algebraDim(int w)
    {
        requireDegree(w);
        if (w == 0) return 1;
        auto& sys = system(Variant::A, w);
        return sys.dimOf(0, sys.fullMask());
    }

    /// Degree-w piece dimension of a presented module over this algebra.
    int moduleDim(const ModulePresentation<T>& mod, int w)
    {
        const int e = w - mod.initialDegree;
        if (e < 0) return 0;
        requireDegree(w);
        GradedContext<T> sub(alg_, bound_);
        if (mod.side == Side::Left) {
            sub.setLeftModule(mod);
            auto& sys = sub.system(Variant::AN, e);
            return sys.dimOf(0, sys.fullMask());
        }
        sub.setRightModule(mod);
        auto& sys = sub.system(Variant::MA, e);
        return sys.dimOf(0, sys.fullMask());
    }

    /**
     * Relation collection S^n for degree n in the given variant, as a plain
     * (unblocked) SubspaceCollection for the lattice layer. The blocked
     * members stay in the memoized system; this expands them to global
     * coordinates, so use it at desk scales only.
     */
    SubspaceCollection<T> relationCollection(Variant v, int e)
    {
        auto& sys = system(v, e);
        std::vector<Subspace<T>> members;
        for (int i = 1; i <= sys.memberCount(); ++i)
            members.push_back(toGlobal(sys.space(), sys.member(i)));
        return SubspaceCollection<T>(sys.space().dim(), std::move(members));
    }

private:
    MemberSystem<T> buildSystem(Variant v, int e) const
    {
        if (variantHasM(v) && !right_) throw std::invalid_argument("no right module configured");
        if (variantHasN(v) && !left_) throw std::invalid_argument("no left module configured");
        requireDegree(ambientDegree(v, e));

        const int m = alg_.gens;
        std::vector<int> slotDims;
        if (variantHasM(v)) slotDims.push_back(right_->gens);
        for (int i = 0; i < e; ++i) slotDims.push_back(m);
        if (variantHasN(v)) slotDims.push_back(left_->gens);
        if (slotDims.empty()) slotDims.push_back(1);  // scalar ambient

        std::vector<std::vector<Weight>> slotWeights;
        const bool weighted = alg_.weighted() && (!variantHasM(v) || right_->weighted()) &&
                              (!variantHasN(v) || left_->weighted());
        if (weighted) {
            if (variantHasM(v)) slotWeights.push_back(right_->weights);
            for (int i = 0; i < e; ++i) slotWeights.push_back(alg_.weights);
            if (variantHasN(v)) slotWeights.push_back(left_->weights);
            if (static_cast<int>(slotWeights.size()) < static_cast<int>(slotDims.size()))
                slotWeights.push_back({Weight(alg_.weights.front().size(), 0)});  // scalar slot
        }

        TensorSpace space = TensorSpace::build(slotDims, slotWeights);

        std::vector<BlockedSubspace<T>> members;
        const int mOffset = variantHasM(v) ? 1 : 0;
        if (e > 0 && variantHasM(v))
            members.push_back(
                BlockedSubspace<T>::fromRows(space, placePairRows(space, 0, right_->relations.basis())));
        for (int gap = 1; gap <= e - 1; ++gap)
            members.push_back(BlockedSubspace<T>::fromRows(
                space, placePairRows(space, mOffset + gap - 1, alg_.relations.basis())));
        if (e > 0 && variantHasN(v))
            members.push_back(BlockedSubspace<T>::fromRows(
                space, placePairRows(space, mOffset + e - 1, left_->relations.basis())));
        return MemberSystem<T>(std::move(space), std::move(members));
    }

    AlgebraPresentation<T> alg_;
    std::optional<ModulePresentation<T>> left_;
    std::optional<ModulePresentation<T>> right_;
    int bound_;
    std::map<std::pair<Variant, int>, std::unique_ptr<MemberSystem<T>>> systems_;
    std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

namespace detail {

/// Express a sparse global homogeneous row in a blocked subquotient's
/// coordinates (coset-rep coefficients, offset across blocks). Returns false
/// if the row is not in numerator + denominator.
template <typename T>
bool expressRow(const TensorSpace& sp, const BlockedSubquotient<T>& sq,
                const std::vector<std::pair<int, T>>& row, std::vector<T>& coeffOut)
{
    int total = 0;
    std::vector<int> offsets(sq.blockCount());
    for (int b = 0; b < sq.blockCount(); ++b) {
        offsets[b] = total;
        total += sq.block(b).dim();
    }
    coeffOut.assign(total, T(0));
    if (row.empty()) return true;
    const int b = sp.blockOfCoord(row.front().first);
    const auto& q = sq.block(b);
    const int n = static_cast<int>(sp.blockCoords(b).size());
    MatrixX<T> rhs(1, n);
    rhs.setZero();
    for (const auto& [g, v] : row) {
        if (sp.blockOfCoord(g) != b) return false;
        rhs(0, sp.posOfCoord(g)) = v;
    }
    const auto& reps = q.cosetReps();
    const auto& den = q.denominator().basis();
    MatrixX<T> span(reps.rows() + den.rows(), n);
    if (reps.rows() > 0) span.topRows(reps.rows()) = reps;
    if (den.rows() > 0) span.bottomRows(den.rows()) = den;
    auto [coeff, ok] = expressInSpan(span, rhs);
    if (!ok[0]) return false;
    for (int j = 0; j < q.dim(); ++j) coeffOut[offsets[b] + j] = coeff(0, j);
    return true;
}

/// Coset representatives of a blocked subquotient as sparse global rows.
template <typename T>
std::vector<std::vector<std::pair<int, T>>> globalReps(const TensorSpace& sp,
                                                       const BlockedSubquotient<T>& sq)
{
    std::vector<std::vector<std::pair<int, T>>> out;
    for (int b = 0; b < sq.blockCount(); ++b) {
        const auto& reps = sq.block(b).cosetReps();
        const auto& coords = sp.blockCoords(b);
        for (int r = 0; r < reps.rows(); ++r) {
            std::vector<std::pair<int, T>> row;
            for (int c = 0; c < reps.cols(); ++c)
                if (reps(r, c) != T(0)) row.emplace_back(coords[c], reps(r, c));
            out.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace detail

/**
 * Veronese power: generators = basis of A_d, degree-2 relations =
 * ker(A_d (x) A_d -> A_{2d}). Quadraticity of the full ideal is only
 * guaranteed when A is Koszul, so callers get the presentation plus a flag
 * they can check; Schur/Tor work on A^{(d)} normally routes through the
 * rescaling identity instead of this presentation.
 */
template <typename T>
AlgebraPresentation<T> veronese(GradedContext<T>& ctx, int d)
{
    if (d < 1) throw std::invalid_argument("veronese: d >= 1 required");
    if (d == 1) return ctx.algebra();
    ctx.requireDegree(2 * d);

    auto& sysD = ctx.system(Variant::A, d);
    auto& sys2D = ctx.system(Variant::A, 2 * d);
    const auto& pieceD = sysD.subq(0, sysD.fullMask());
    const auto& piece2D = sys2D.subq(0, sys2D.fullMask());
    const auto reps = detail::globalReps(sysD.space(), pieceD);
    const int G = static_cast<int>(reps.size());

    // images of r_i (x) r_j in A_{2d}
    MatrixX<T> images(G * G, piece2D.dim());
    const int shift = sysD.space().dim();  // stride of the first half
    for (int i = 0; i < G; ++i)
        for (int j = 0; j < G; ++j) {
            std::vector<std::pair<int, T>> prod;
            for (const auto& [gi, vi] : reps[i])
                for (const auto& [gj, vj] : reps[j]) prod.emplace_back(gi * shift + gj, vi * vj);
            std::vector<T> coeff;
            if (!detail::expressRow(sys2D.space(), piece2D, prod, coeff))
                throw std::logic_error("veronese: product escaped A_{2d}");
            for (int c = 0; c < piece2D.dim(); ++c) images(i * G + j, c) = coeff[c];
        }

    AlgebraPresentation<T> out;
    out.name = ctx.algebra().name + "^(" + std::to_string(d) + ")";
    out.gens = G;
    out.relations = Subspace<T>::span(kernelBasis(MatrixX<T>(images.transpose())));
    if (ctx.algebra().weighted()) {
        // each coset rep is weight-homogeneous; its block weight is the weight
        int idx = 0;
        for (int b = 0; b < pieceD.blockCount(); ++b)
            for (int r = 0; r < pieceD.block(b).dim(); ++r) {
                (void)r;
                out.weights.push_back(sysD.space().blockWeight(b));
                ++idx;
            }
        (void)idx;
    }
    return out;
}

/// Whether every product pair relation of the Veronese presentation is
/// detected at degree 2 (flag only; see veronese()).
template <typename T>
bool veroneseQuadraticityFlag(GradedContext<T>& ctx, int d)
{
    // dim check at degree 3 of the Veronese presentation vs A_{3d}
    AlgebraPresentation<T> ver = veronese(ctx, d);
    GradedContext<T> vctx(ver, 3);
    if (3 * d > ctx.degreeBound()) return true;  // cannot check; report optimistic
    return vctx.algebraDim(3) == [&] {
        auto& sys = ctx.system(Variant::A, 3 * d);
        return sys.dimOf(0, sys.fullMask());
    }();
}

/**
 * Segre product presentation: generators A_1 (x) B_1, relations the kernel of
 * the diagonal multiplication (A_1 B_1)^{(x)2} -> A_2 (x) B_2. Weights live in
 * the concatenated alphabets.
 */
template <typename T>
AlgebraPresentation<T> segre(GradedContext<T>& actx, GradedContext<T>& bctx)
{
    const int mA = actx.algebra().gens, mB = bctx.algebra().gens;
    auto& sysA2 = actx.system(Variant::A, 2);
    auto& sysB2 = bctx.system(Variant::A, 2);
    const auto& a2 = sysA2.subq(0, sysA2.fullMask());
    const auto& b2 = sysB2.subq(0, sysB2.fullMask());

    // coefficients of e_a (x) e_a' in the A_2 basis, and mirror for B
    const int dimA2 = a2.dim(), dimB2 = b2.dim();
    std::vector<std::vector<T>> exprA(mA * mA), exprB(mB * mB);
    for (int aa = 0; aa < mA * mA; ++aa) {
        std::vector<std::pair<int, T>> row{{aa, T(1)}};
        if (!detail::expressRow(sysA2.space(), a2, row, exprA[aa]))
            throw std::logic_error("segre: basis vector escaped A_2");
    }
    for (int bb = 0; bb < mB * mB; ++bb) {
        std::vector<std::pair<int, T>> row{{bb, T(1)}};
        if (!detail::expressRow(sysB2.space(), b2, row, exprB[bb]))
            throw std::logic_error("segre: basis vector escaped B_2");
    }

    const int G = mA * mB;
    MatrixX<T> images(G * G, dimA2 * dimB2);
    images.setZero();
    for (int a = 0; a < mA; ++a)
        for (int b = 0; b < mB; ++b)
            for (int a2i = 0; a2i < mA; ++a2i)
                for (int b2i = 0; b2i < mB; ++b2i) {
                    const int rowIdx = (a * mB + b) * G + (a2i * mB + b2i);
                    const auto& ca = exprA[a * mA + a2i];
                    const auto& cb = exprB[b * mB + b2i];
                    for (int x = 0; x < dimA2; ++x) {
                        if (ca[x] == T(0)) continue;
                        for (int y = 0; y < dimB2; ++y)
                            if (cb[y] != T(0)) images(rowIdx, x * dimB2 + y) = ca[x] * cb[y];
                    }
                }

    AlgebraPresentation<T> out;
    out.name = actx.algebra().name + "o" + bctx.algebra().name;
    out.gens = G;
    out.relations = Subspace<T>::span(kernelBasis(MatrixX<T>(images.transpose())));
    if (actx.algebra().weighted() && bctx.algebra().weighted()) {
        const size_t lA = actx.algebra().weights.front().size();
        const size_t lB = bctx.algebra().weights.front().size();
        for (int a = 0; a < mA; ++a)
            for (int b = 0; b < mB; ++b) {
                Weight w(lA + lB, 0);
                for (size_t k = 0; k < lA; ++k) w[k] = actx.algebra().weights[a][k];
                for (size_t k = 0; k < lB; ++k) w[lA + k] = bctx.algebra().weights[b][k];
                out.weights.push_back(std::move(w));
            }
    }
    return out;
}

/**
 * Truncation A_+^d as a left or right module: generators a basis of A_d,
 * relations the kernel of V (x) A_d -> A_{d+1} (left) or its mirror.
 */
template <typename T>
ModulePresentation<T> truncation(GradedContext<T>& ctx, int d, Side side)
{
    ctx.requireDegree(d + 1);
    const int m = ctx.algebra().gens;
    if (d == 0) return builtin::freeModule(ctx.algebra(), side, 0, 1);

    auto& sysD = ctx.system(Variant::A, d);
    auto& sysD1 = ctx.system(Variant::A, d + 1);
    const auto& pieceD = sysD.subq(0, sysD.fullMask());
    const auto& pieceD1 = sysD1.subq(0, sysD1.fullMask());
    const auto reps = detail::globalReps(sysD.space(), pieceD);
    const int G = static_cast<int>(reps.size());

    const int ambient = side == Side::Left ? m * G : G * m;
    MatrixX<T> images(ambient, pieceD1.dim());
    const int dimD = sysD.space().dim();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < G; ++j) {
            std::vector<std::pair<int, T>> prod;
            for (const auto& [gj, vj] : reps[j]) {
                // left: e_i tensor rep (V slot leftmost); right: rep tensor e_i
                const int idx = side == Side::Left ? i * dimD + gj : gj * m + i;
                prod.emplace_back(idx, vj);
            }
            std::vector<T> coeff;
            if (!detail::expressRow(sysD1.space(), pieceD1, prod, coeff))
                throw std::logic_error("truncation: product escaped A_{d+1}");
            const int rowIdx = side == Side::Left ? i * G + j : j * m + i;
            for (int c = 0; c < pieceD1.dim(); ++c) images(rowIdx, c) = coeff[c];
        }

    ModulePresentation<T> out;
    out.name = ctx.algebra().name + "_+^" + std::to_string(d);
    out.side = side;
    out.initialDegree = d;
    out.gens = G;
    out.relations = Subspace<T>::span(kernelBasis(MatrixX<T>(images.transpose())));
    if (ctx.algebra().weighted()) {
        for (int b = 0; b < pieceD.blockCount(); ++b)
            for (int r = 0; r < pieceD.block(b).dim(); ++r) {
                (void)r;
                out.weights.push_back(sysD.space().blockWeight(b));
            }
    }
    return out;
}

}  // namespace rk
