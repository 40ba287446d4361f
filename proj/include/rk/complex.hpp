#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rk/linalg.hpp"

namespace rk {

enum class Direction { Chain, Cochain };

/**
 * A finite complex of based free modules: term dimensions plus differential
 * matrices. For a chain complex, diffs[i] maps term i+1 -> term i; for a
 * cochain complex, diffs[i] maps term i -> term i+1. Consecutive
 * differentials must compose to zero (checked at construction).
 */
template <typename T>
class ComplexOfSpaces
{
public:
    ComplexOfSpaces() : direction_(Direction::Chain), offset_(0) {}

    ComplexOfSpaces(Direction dir, std::vector<int> dims, std::vector<MatrixX<T>> diffs,
                    int gradingOffset = 0)
        : direction_(dir), offset_(gradingOffset), dims_(std::move(dims)),
          diffs_(std::move(diffs))
    {
        const int n = static_cast<int>(dims_.size());
        if (static_cast<int>(diffs_.size()) != std::max(0, n - 1))
            throw std::invalid_argument("complex: need one differential per adjacent pair");
        for (int i = 0; i + 1 < n; ++i) {
            const auto& d = diffs_[i];
            const int from = direction_ == Direction::Chain ? dims_[i + 1] : dims_[i];
            const int to = direction_ == Direction::Chain ? dims_[i] : dims_[i + 1];
            if (d.rows() != to || d.cols() != from)
                throw std::invalid_argument("complex: differential shape mismatch at " +
                                            std::to_string(i));
        }
        for (int i = 0; i + 2 < n; ++i) {
            MatrixX<T> prod = direction_ == Direction::Chain
                                  ? MatrixX<T>(diffs_[i] * diffs_[i + 1])
                                  : MatrixX<T>(diffs_[i + 1] * diffs_[i]);
            for (int r = 0; r < prod.rows(); ++r)
                for (int c = 0; c < prod.cols(); ++c)
                    if (prod(r, c) != T(0))
                        throw std::invalid_argument(
                            "complex: differentials do not compose to zero at " +
                            std::to_string(i));
        }
    }

    Direction direction() const { return direction_; }
    int gradingOffset() const { return offset_; }
    int length() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& termDims() const { return dims_; }
    const std::vector<MatrixX<T>>& differentials() const { return diffs_; }

    /**
     * dim H at each position: dim ker(outgoing) - rank(incoming), following
     * the complex's direction convention.
     */
    std::vector<int> homologyDims() const
    {
        const int n = length();
        std::vector<int> ranks(std::max(0, n - 1));
        for (int i = 0; i + 1 < n; ++i) ranks[i] = rankOf(diffs_[i]);
        std::vector<int> h(n);
        for (int i = 0; i < n; ++i) {
            int out = 0, in = 0;
            if (direction_ == Direction::Chain) {
                // diffs_[i-1]: term i -> term i-1 (outgoing), diffs_[i]: i+1 -> i
                out = i > 0 ? ranks[i - 1] : 0;
                in = i + 1 < n ? ranks[i] : 0;
            } else {
                out = i + 1 < n ? ranks[i] : 0;
                in = i > 0 ? ranks[i - 1] : 0;
            }
            h[i] = dims_[i] - out - in;
        }
        return h;
    }

    bool exactInPositiveDegrees() const
    {
        auto h = homologyDims();
        for (int i = 1; i < length(); ++i)
            if (h[i] != 0) return false;
        return true;
    }

private:
    Direction direction_;
    int offset_;
    std::vector<int> dims_;
    std::vector<MatrixX<T>> diffs_;
};

/**
 * A complex split into weight blocks (one ComplexOfSpaces per block); homology
 * and term dimensions aggregate across blocks. Unweighted computations use a
 * single block.
 */
template <typename T>
struct BlockedComplex
{
    std::vector<ComplexOfSpaces<T>> blocks;
    int length() const { return blocks.empty() ? 0 : blocks.front().length(); }

    std::vector<int> termDims() const
    {
        std::vector<int> out(length(), 0);
        for (const auto& b : blocks)
            for (int i = 0; i < b.length(); ++i) out[i] += b.termDims()[i];
        return out;
    }

    std::vector<int> homologyDims() const
    {
        std::vector<int> out(length(), 0);
        for (const auto& b : blocks) {
            auto h = b.homologyDims();
            for (int i = 0; i < b.length(); ++i) out[i] += h[i];
        }
        return out;
    }

    bool exactInPositiveDegrees() const
    {
        auto h = homologyDims();
        for (int i = 1; i < static_cast<int>(h.size()); ++i)
            if (h[i] != 0) return false;
        return true;
    }
};

}  // namespace rk
