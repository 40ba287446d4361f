#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rk/presentation_io.hpp"
#include "rk/quadratic.hpp"

using namespace rk;

namespace {

int binom(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return static_cast<int>(r);
}

int symDim(int m, int d) { return binom(m + d - 1, d); }

AlgebraPresentation<Rational> randomQuadratic(int m, int relDim, std::mt19937& rng)
{
    std::uniform_int_distribution<int> val(-2, 2);
    MatrixX<Rational> rows(relDim, m * m);
    for (int i = 0; i < relDim; ++i)
        for (int j = 0; j < m * m; ++j) rows(i, j) = Rational(val(rng));
    AlgebraPresentation<Rational> a;
    a.name = "random";
    a.gens = m;
    a.relations = Subspace<Rational>::span(rows);
    return a;
}

}  // namespace

TEST_CASE("relation collections of the built-ins")
{
    GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(2));
    auto coll = sym.relationCollection(Variant::A, 3);
    REQUIRE(coll.size() == 2);
    REQUIRE(coll.ambientDim() == 8);
    REQUIRE(coll.member(0).dim() == 2);  // Q2 (x) V with dim Q2 = 1
    REQUIRE(coll.member(1).dim() == 2);

    GradedContext<Rational> tensor(builtin::tensorAlgebra<Rational>(2));
    auto tcoll = tensor.relationCollection(Variant::A, 3);
    for (int i = 0; i < tcoll.size(); ++i) REQUIRE(tcoll.member(i).dim() == 0);

    // a double-module collection at e = 0 is empty by convention
    GradedContext<Rational> mod(builtin::symmetricAlgebra<Rational>(2));
    mod.setRightModule(builtin::trivialModule(mod.algebra(), Side::Right));
    mod.setLeftModule(builtin::trivialModule(mod.algebra(), Side::Left));
    REQUIRE(mod.relationCollection(Variant::MAN, 0).size() == 0);
}

TEST_CASE("graded piece dimensions of the built-ins")
{
    GradedContext<Rational> sym2(builtin::symmetricAlgebra<Rational>(2));
    REQUIRE(sym2.algebraDim(3) == 4);
    GradedContext<Rational> ext3(builtin::exteriorAlgebra<Rational>(3));
    REQUIRE(ext3.algebraDim(2) == 3);
    REQUIRE(ext3.algebraDim(4) == 0);
}

TEST_CASE("graded dims match closed forms through degree 6")
{
    for (int m = 2; m <= 3; ++m) {
        GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(m));
        GradedContext<Rational> ext(builtin::exteriorAlgebra<Rational>(m));
        GradedContext<Rational> ten(builtin::tensorAlgebra<Rational>(m));
        for (int d = 0; d <= 6; ++d) {
            REQUIRE(sym.algebraDim(d) == symDim(m, d));
            REQUIRE(ext.algebraDim(d) == binom(m, d));
            int td = 1;
            for (int i = 0; i < d; ++i) td *= m;
            REQUIRE(ten.algebraDim(d) == td);
        }
    }
}

TEST_CASE("multi-part graded pieces multiply")
{
    GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(2));
    auto& sys = sym.system(Variant::A, 3);
    auto masks = sym.gradedPieceMasks(Variant::A, {2, 1}, 3);
    REQUIRE(sys.dimOf(masks.first, masks.second) == 6);  // dim A_2 * dim A_1 = 3*2
}

TEST_CASE("degree bound is enforced")
{
    GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(2), 4);
    REQUIRE_THROWS_AS(sym.algebraDim(5), std::out_of_range);
}

TEST_CASE("quadratic dual of the built-ins")
{
    for (int m = 2; m <= 3; ++m) {
        auto sym = builtin::symmetricAlgebra<Rational>(m);
        auto dual = quadraticDual(sym);
        REQUIRE(dual.relations.dim() == m * (m + 1) / 2);  // symmetric tensors
        GradedContext<Rational> ctx(dual);
        REQUIRE(ctx.algebraDim(2) == binom(m, 2));  // exterior algebra

        auto tensor = builtin::tensorAlgebra<Rational>(m);
        auto tdual = quadraticDual(tensor);
        REQUIRE(tdual.relations.dim() == m * m);  // everything: dual is V* in degree <= 1
        GradedContext<Rational> tctx(tdual);
        REQUIRE(tctx.algebraDim(1) == m);
        REQUIRE(tctx.algebraDim(2) == 0);
    }
}

TEST_CASE("double quadratic dual is the identity on presentations")
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = 2 + trial % 2;
        auto a = randomQuadratic(m, 1 + trial % (m * m), rng);
        auto dd = quadraticDual(quadraticDual(a));
        REQUIRE(dd.relations == a.relations);
        REQUIRE(dd.gens == a.gens);
    }
}

TEST_CASE("module dual flips sides and annihilates relations")
{
    auto sym = builtin::symmetricAlgebra<Rational>(2);
    auto trivial = builtin::trivialModule(sym, Side::Left);
    auto dual = moduleDual(sym, trivial);
    REQUIRE(dual.side == Side::Right);
    REQUIRE(dual.relations.dim() == 0);  // annihilator of everything

    auto free = builtin::freeModule(sym, Side::Left);
    auto fdual = moduleDual(sym, free);
    REQUIRE(fdual.relations.dim() == 2);  // everything: dual of the free cover is trivial
}

TEST_CASE("graded dual of a one-degree module flips the side")
{
    auto sym = builtin::symmetricAlgebra<Rational>(2);
    auto trivial = builtin::trivialModule(sym, Side::Left, 0, 2);
    auto dual = gradedDualModule(sym, trivial);
    REQUIRE(dual.side == Side::Right);
    REQUIRE(dual.gens == 2);
    REQUIRE(dual.relations.dim() == 4);
    REQUIRE_THROWS_AS(gradedDualModule(sym, builtin::freeModule(sym, Side::Left)),
                      std::invalid_argument);
}

TEST_CASE("veronese presentation of the quadric")
{
    GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(2));
    auto ver = veronese(sym, 2);
    REQUIRE(ver.gens == 3);
    REQUIRE(ver.relations.dim() == 4);  // dim ker(A_2 (x) A_2 -> A_4) = 9 - 5
    REQUIRE(ver.weights.size() == 3);

    // d = 1 is the identity
    auto same = veronese(sym, 1);
    REQUIRE(same.gens == 2);
    REQUIRE(same.relations == sym.algebra().relations);

    // the Veronese of a Koszul algebra is quadratic through degree 3
    REQUIRE(veroneseQuadraticityFlag(sym, 2));
}

TEST_CASE("veronese graded dims match the strand of A")
{
    GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(2), 8);
    auto ver = veronese(sym, 2);
    GradedContext<Rational> vctx(ver, 4);
    for (int d = 0; d <= 3; ++d) REQUIRE(vctx.algebraDim(d) == symDim(2, 2 * d));
}

TEST_CASE("segre product dims multiply")
{
    GradedContext<Rational> a(builtin::symmetricAlgebra<Rational>(2));
    GradedContext<Rational> b(builtin::symmetricAlgebra<Rational>(2));
    auto seg = segre(a, b);
    REQUIRE(seg.gens == 4);
    GradedContext<Rational> sctx(seg, 4);
    REQUIRE(sctx.algebraDim(2) == 9);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        auto pa = randomQuadratic(2, 1 + trial % 3, rng);
        auto pb = randomQuadratic(2, 1 + (trial + 1) % 3, rng);
        GradedContext<Rational> ca(pa), cb(pb);
        auto s = segre(ca, cb);
        GradedContext<Rational> cs(s, 4);
        for (int d = 0; d <= 4; ++d)
            REQUIRE(cs.algebraDim(d) == ca.algebraDim(d) * cb.algebraDim(d));
    }
}

TEST_CASE("truncation presentations")
{
    GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(2));
    auto t1 = truncation(sym, 1, Side::Left);
    REQUIRE(t1.gens == 2);
    REQUIRE(t1.initialDegree == 1);
    REQUIRE(t1.relations.dim() == 1);  // ker(V (x) V -> S_2) = wedge^2

    auto t0 = truncation(sym, 0, Side::Left);
    REQUIRE(t0.gens == 1);
    REQUIRE(t0.relations.dim() == 0);

    // graded pieces of the truncation match the algebra's shifted pieces
    auto t2 = truncation(sym, 2, Side::Right);
    GradedContext<Rational> ctx(sym.algebra());
    ctx.setRightModule(t2);
    for (int j = 0; j <= 3; ++j) REQUIRE(ctx.moduleDim(t2, 2 + j) == symDim(2, 2 + j));
}

TEST_CASE("weight blocks decompose graded pieces")
{
    GradedContext<Rational> sym(builtin::symmetricAlgebra<Rational>(3));
    auto& sys = sym.system(Variant::A, 3);
    const auto& piece = sys.subq(0, sys.fullMask());
    int total = 0;
    for (int b = 0; b < piece.blockCount(); ++b) total += piece.block(b).dim();
    REQUIRE(total == sym.algebraDim(3));
    // each monomial weight block of S(V) is one-dimensional
    for (int b = 0; b < piece.blockCount(); ++b) REQUIRE(piece.block(b).dim() <= 1);
}

TEST_CASE("presentation JSON round trip and weight homogeneity check")
{
    const std::string text = R"({
      "name": "demo",
      "field": {"kind": "rational"},
      "generators": ["x", "y"],
      "weights": [[1, 0], [0, 1]],
      "relations": [[[[0, 1], "1"], [[1, 0], "-1"]]]
    })";
    auto raw = parsePresentationJson(text);
    auto alg = toAlgebra<Rational>(raw);
    REQUIRE(alg.gens == 2);
    REQUIRE(alg.relations.dim() == 1);
    GradedContext<Rational> ctx(alg);
    REQUIRE(ctx.algebraDim(2) == 3);

    // canonical serialization is stable
    REQUIRE(canonicalPresentationJson(raw) == canonicalPresentationJson(raw));

    // inhomogeneous relations with weights are rejected
    const std::string bad = R"({
      "name": "bad",
      "field": {"kind": "rational"},
      "generators": ["x", "y"],
      "weights": [[1, 0], [0, 1]],
      "relations": [[[[0, 1], "1"], [[0, 0], "-1"]]]
    })";
    auto rawBad = parsePresentationJson(bad);
    REQUIRE_THROWS_AS(toAlgebra<Rational>(rawBad), std::invalid_argument);
}

TEST_CASE("prime field context computes the same built-in dims")
{
    GradedContext<Fp> sym(builtin::symmetricAlgebra<Fp>(2));
    REQUIRE(sym.algebraDim(3) == 4);
    GradedContext<Fp> ext(builtin::exteriorAlgebra<Fp>(3));
    REQUIRE(ext.algebraDim(2) == 3);
}
