#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "rk/composition.hpp"
#include "rk/tensorspace.hpp"

namespace rk {

/**
 * One term of a cube-shaped complex: a subset key (for edges and signs) and
 * the member masks describing the term's subquotient.
 */
struct CubeTerm
{
    std::set<int> key;
    std::uint64_t kerneled = 0;
    std::uint64_t merged = 0;
};

/**
 * Assemble a complex whose terms sit on subsets of an index set, with an edge
 * J -> J u {j} carrying the identity-induced map with sign sgn(j, J). For
 * Direction::Cochain the differentials raise the grade; for Direction::Chain
 * they lower it (maps go from grade g+1 terms into grade g terms). Terms are
 * grouped by grade in the order given.
 */
template <typename T>
BlockedComplex<T> cubeComplex(MemberSystem<T>& sys, Direction dir,
                              const std::vector<std::vector<CubeTerm>>& grades)
{
    const int G = static_cast<int>(grades.size());
    const int nBlocks = sys.space().blockCount();

    // materialize all term subquotients
    std::vector<std::vector<const BlockedSubquotient<T>*>> terms(G);
    for (int g = 0; g < G; ++g)
        for (const auto& t : grades[g]) terms[g].push_back(&sys.subq(t.kerneled, t.merged));

    BlockedComplex<T> out;
    for (int b = 0; b < nBlocks; ++b) {
        std::vector<int> dims(G, 0);
        for (int g = 0; g < G; ++g)
            for (const auto* t : terms[g]) dims[g] += t->block(b).dim();

        std::vector<MatrixX<T>> diffs;
        for (int g = 0; g + 1 < G; ++g) {
            const int rows = dir == Direction::Cochain ? dims[g + 1] : dims[g];
            const int cols = dir == Direction::Cochain ? dims[g] : dims[g + 1];
            MatrixX<T> d(rows, cols);
            d.setZero();
            int offLow = 0;
            for (size_t a = 0; a < grades[g].size(); ++a) {
                const auto& J = grades[g][a].key;
                int offHigh = 0;
                for (size_t c = 0; c < grades[g + 1].size(); ++c) {
                    const auto& K = grades[g + 1][c].key;
                    const int dimLow = terms[g][a]->block(b).dim();
                    const int dimHigh = terms[g + 1][c]->block(b).dim();
                    if (dimLow > 0 && dimHigh > 0 &&
                        std::includes(K.begin(), K.end(), J.begin(), J.end())) {
                        std::vector<int> extra;
                        std::set_difference(K.begin(), K.end(), J.begin(), J.end(),
                                            std::back_inserter(extra));
                        if (extra.size() == 1) {
                            const T s = T(sgn(extra[0], J));
                            MatrixX<T> m =
                                dir == Direction::Cochain
                                    ? inducedIdentityMap(terms[g][a]->block(b),
                                                         terms[g + 1][c]->block(b))
                                    : inducedIdentityMap(terms[g + 1][c]->block(b),
                                                         terms[g][a]->block(b));
                            for (int r = 0; r < m.rows(); ++r)
                                for (int cc = 0; cc < m.cols(); ++cc)
                                    if (m(r, cc) != T(0)) {
                                        if (dir == Direction::Cochain)
                                            d(offHigh + r, offLow + cc) = s * m(r, cc);
                                        else
                                            d(offLow + r, offHigh + cc) = s * m(r, cc);
                                    }
                        }
                    }
                    offHigh += dimHigh;
                }
                offLow += terms[g][a]->block(b).dim();
            }
            diffs.push_back(std::move(d));
        }
        out.blocks.emplace_back(dir, std::move(dims), std::move(diffs));
    }
    return out;
}

}  // namespace rk
