#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rk/subspace.hpp"

using namespace rk;

namespace {

Subspace<Rational> randomSubspace(int ambient, int rows, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(-3, 3);
    MatrixX<Rational> m(rows, ambient);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < ambient; ++j) m(i, j) = Rational(dist(rng));
    return Subspace<Rational>::span(m);
}

Subspace<Rational> spanOf(std::initializer_list<std::initializer_list<int>> rows, int ambient)
{
    MatrixX<Rational> m(static_cast<int>(rows.size()), ambient);
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (int v : row) m(r, c++) = Rational(v);
        ++r;
    }
    return Subspace<Rational>::span(m);
}

/// Independent dim(a o b) oracle through annihilators:
/// dim(a ^ b) = n - dim(ann a + ann b).
int intersectDimOracle(const Subspace<Rational>& a, const Subspace<Rational>& b)
{
    return a.ambientDim() - sum(annihilator(a), annihilator(b)).dim();
}

}  // namespace

TEST_CASE("coordinate planes")
{
    auto e1 = spanOf({{1, 0}}, 2);
    auto e2 = spanOf({{0, 1}}, 2);
    REQUIRE(sum(e1, e2) == Subspace<Rational>::full(2));

    auto diag = spanOf({{1, 1}}, 2);
    REQUIRE(intersect(Subspace<Rational>::full(2), diag) == diag);
}

TEST_CASE("modular law dimension identity on random pairs")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = randomSubspace(6, 1 + trial % 4, rng);
        auto b = randomSubspace(6, 1 + (trial / 4) % 4, rng);
        const int inter = intersect(a, b).dim();
        REQUIRE(a.dim() + b.dim() == sum(a, b).dim() + inter);
        REQUIRE(inter == intersectDimOracle(a, b));
    }
}

TEST_CASE("sum and intersect are commutative, associative, idempotent")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = randomSubspace(6, 2, rng);
        auto b = randomSubspace(6, 3, rng);
        auto c = randomSubspace(6, 2, rng);
        REQUIRE(sum(a, b) == sum(b, a));
        REQUIRE(intersect(a, b) == intersect(b, a));
        REQUIRE(sum(sum(a, b), c) == sum(a, sum(b, c)));
        REQUIRE(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        REQUIRE(sum(a, a) == a);
        REQUIRE(intersect(a, a) == a);
    }
}

TEST_CASE("canonical representatives: different spanning sets, equal subspaces")
{
    auto a = spanOf({{1, 2, 3}, {0, 1, 1}}, 3);
    auto b = spanOf({{1, 3, 4}, {2, 5, 7}}, 3);
    REQUIRE(a == b);
}

TEST_CASE("ambient mismatch is an error")
{
    auto a = spanOf({{1, 0}}, 2);
    auto b = spanOf({{1, 0, 0}}, 3);
    REQUIRE_THROWS_AS(sum(a, b), std::invalid_argument);
    REQUIRE_THROWS_AS(intersect(a, b), std::invalid_argument);
}

TEST_CASE("annihilator dimensions and double annihilator")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = randomSubspace(5, 2, rng);
        auto ann = annihilator(a);
        REQUIRE(ann.dim() == 5 - a.dim());
        REQUIRE(annihilator(ann) == a);
    }
    REQUIRE(annihilator(Subspace<Rational>::full(4)).dim() == 0);
    REQUIRE(annihilator(Subspace<Rational>::zero(4)) == Subspace<Rational>::full(4));
}

TEST_CASE("subquotient dimensions and coset representatives")
{
    auto num = spanOf({{1, 0, 0}, {0, 1, 0}}, 3);
    auto den = spanOf({{1, 1, 1}}, 3);
    Subquotient<Rational> q(num, den);
    REQUIRE(q.dim() == 2);  // den meets num trivially

    Subquotient<Rational> q2(num, spanOf({{1, 0, 0}}, 3));
    REQUIRE(q2.dim() == 1);
    // the representative must lie in the numerator and off the denominator
    VectorX<Rational> rep = q2.cosetReps().row(0).transpose();
    REQUIRE(num.contains(rep));
    REQUIRE_FALSE(spanOf({{1, 0, 0}}, 3).contains(rep));
}

TEST_CASE("induced map: identity on identical subquotients")
{
    auto num = spanOf({{1, 0, 0}, {0, 1, 0}}, 3);
    auto den = spanOf({{0, 1, 0}}, 3);
    Subquotient<Rational> q(num, den);
    MatrixX<Rational> id(3, 3);
    id.setZero();
    for (int i = 0; i < 3; ++i) id(i, i) = Rational(1);
    auto m = inducedMap(q, q, id);
    REQUIRE(m.rows() == q.dim());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) REQUIRE(m(i, j) == Rational(i == j ? 1 : 0));
}

TEST_CASE("induced map: zero when the denominator swallows the numerator")
{
    auto num = spanOf({{1, 0}}, 2);
    Subquotient<Rational> domain(num, Subspace<Rational>::zero(2));
    Subquotient<Rational> codomain(num, num);  // denominator = full numerator
    auto m = inducedIdentityMap(domain, codomain);
    REQUIRE(m.rows() == 0);
    REQUIRE(m.cols() == 1);
}

TEST_CASE("canonical surjection V(x)V -> V(x)V / antisym has rank 3 for dim V = 2")
{
    // Q2 = span{e12 - e21} inside a 4-dim pair space
    auto q2 = spanOf({{0, 1, -1, 0}}, 4);
    Subquotient<Rational> domain(Subspace<Rational>::full(4), Subspace<Rational>::zero(4));
    Subquotient<Rational> codomain(Subspace<Rational>::full(4), q2);
    auto m = inducedIdentityMap(domain, codomain);
    REQUIRE(m.rows() == 3);  // dim S_2(V) = 3 by monomial count
    REQUIRE(m.cols() == 4);
    REQUIRE(rankOf(m) == 3);
}

TEST_CASE("induced map rejects maps that escape the codomain")
{
    auto x = spanOf({{1, 0}}, 2);
    auto y = spanOf({{0, 1}}, 2);
    Subquotient<Rational> domain(x, Subspace<Rational>::zero(2));
    Subquotient<Rational> codomain(y, Subspace<Rational>::zero(2));
    REQUIRE_THROWS_AS(inducedIdentityMap(domain, codomain), std::domain_error);
}
