#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rk/quadratic.hpp"

namespace rk {

/**
 * Field- and scalar-neutral form of a presentation file. See README for the
 * JSON schema; coefficients stay as strings until a field is chosen.
 */
struct RawPresentation
{
    struct Term
    {
        int i = 0, j = 0;
        std::string coeff;
    };
    std::string name;
    std::string fieldKind = "rational";  // "rational" | "prime"
    std::uint64_t prime = 32003;
    std::vector<std::string> generators;
    std::vector<std::vector<int>> weights;  // optional: one weight vector per generator
    std::vector<std::vector<Term>> relations;

    bool hasModule = false;
    std::string side;  // "left" | "right"
    int initialDegree = 0;
    std::vector<std::string> moduleGenerators;
    std::vector<std::vector<int>> moduleWeights;
    std::vector<std::vector<Term>> moduleRelations;
};

/// Parse a presentation file; throws std::invalid_argument with field context.
RawPresentation parsePresentationJson(const std::string& text);

/// Canonical serialization: sorted keys, coefficients in lowest terms. Feeds
/// the cache hash, so it must be byte-stable.
std::string canonicalPresentationJson(const RawPresentation& p);

/// Relation terms to a subspace of a (dimA x dimB) pair space.
template <typename T>
Subspace<T> relationsToSubspace(const std::vector<std::vector<RawPresentation::Term>>& rels,
                                int dimA, int dimB)
{
    MatrixX<T> rows(static_cast<int>(rels.size()), dimA * dimB);
    rows.setZero();
    for (size_t r = 0; r < rels.size(); ++r) {
        for (const auto& term : rels[r]) {
            if (term.i < 0 || term.i >= dimA || term.j < 0 || term.j >= dimB)
                throw std::invalid_argument("relation index out of range");
            rows(static_cast<int>(r), term.i * dimB + term.j) +=
                FieldTraits<T>::parse(term.coeff);
        }
    }
    return Subspace<T>::span(rows);
}

namespace detail {

template <typename T>
void checkWeightHomogeneous(const std::vector<Weight>& pairWeights, const MatrixX<T>& basis)
{
    for (int r = 0; r < basis.rows(); ++r) {
        std::optional<Weight> w;
        for (int c = 0; c < basis.cols(); ++c) {
            if (basis(r, c) == T(0)) continue;
            const Weight& cw = pairWeights[c];
            if (!w) w = cw;
            else if (*w != cw)
                throw std::invalid_argument(
                    "relations are not weight-homogeneous for the supplied weights");
        }
    }
}

}  // namespace detail

template <typename T>
AlgebraPresentation<T> toAlgebra(const RawPresentation& raw)
{
    AlgebraPresentation<T> a;
    a.name = raw.name;
    a.gens = static_cast<int>(raw.generators.size());
    a.relations = relationsToSubspace<T>(raw.relations, a.gens, a.gens);
    if (!raw.weights.empty()) {
        if (raw.weights.size() != raw.generators.size())
            throw std::invalid_argument("one weight vector per generator required");
        for (const auto& w : raw.weights) a.weights.emplace_back(w.begin(), w.end());
        // weight-homogeneity of Q2
        std::vector<Weight> pw;
        for (int i = 0; i < a.gens; ++i)
            for (int j = 0; j < a.gens; ++j) {
                Weight w = a.weights[i];
                for (size_t k = 0; k < w.size(); ++k) w[k] += a.weights[j][k];
                pw.push_back(std::move(w));
            }
        detail::checkWeightHomogeneous<T>(pw, a.relations.basis());
    }
    return a;
}

template <typename T>
ModulePresentation<T> toModule(const RawPresentation& raw, const AlgebraPresentation<T>& alg)
{
    if (!raw.hasModule) throw std::invalid_argument("presentation has no module section");
    ModulePresentation<T> m;
    m.name = raw.name + ".module";
    m.side = raw.side == "left" ? Side::Left : Side::Right;
    m.initialDegree = raw.initialDegree;
    m.gens = static_cast<int>(raw.moduleGenerators.size());
    const int dimA = m.side == Side::Left ? alg.gens : m.gens;
    const int dimB = m.side == Side::Left ? m.gens : alg.gens;
    m.relations = relationsToSubspace<T>(raw.moduleRelations, dimA, dimB);
    if (!raw.moduleWeights.empty()) {
        for (const auto& w : raw.moduleWeights) m.weights.emplace_back(w.begin(), w.end());
    } else if (!alg.weights.empty()) {
        m.weights.assign(m.gens, Weight(alg.weights.front().size(), 0));
    }
    return m;
}

}  // namespace rk
