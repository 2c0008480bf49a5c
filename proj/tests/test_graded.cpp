#include "doctest.h"

#include "homchar/builtins.hpp"
#include "homchar/graded.hpp"

#include <memory>
#include <random>

using namespace homchar;

namespace {

OraclePtr z2() {
    return std::make_shared<FiniteGroupFunctionHopf>(FiniteGroupFunctionHopf::cyclic_table(2),
                                                     "z2-functions");
}
OraclePtr ext() { return std::make_shared<ExteriorPrimitiveHopf>(); }
OraclePtr ut() { return std::make_shared<UpperTriangularHopf>(); }

// A corrupted variant of the upper-triangular algebra: drops the z(x)y term
// of the coproduct of z-monomials. Negative control for the checkers.
class BrokenCoproduct : public UpperTriangularHopf {
public:
    std::string name() const override { return "broken-coproduct"; }
    Tensor coproduct(const std::string& l) const override {
        int a, b, c;
        REQUIRE(parse_label(l, &a, &b, &c));
        if (c == 0)
            return UpperTriangularHopf::coproduct(l);
        Tensor out;  // keep only the top binomial term x^{a+c}z^0 (x) x^a z^c pattern
        out.add(Word({label(a + c, b, 0), label(a, b, c)}), Rational(1));
        return out;
    }
};

}  // namespace

TEST_CASE("koszul permutation sign is decomposition independent") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 2 + rng() % 5;
        std::vector<int> degs(n);
        for (auto& d : degs)
            d = static_cast<int>(rng() % 4) - 1;
        // build a permutation as a product of random transpositions and track
        // the sign incrementally
        std::vector<size_t> perm(n);
        for (size_t i = 0; i < n; ++i)
            perm[i] = i;
        int tracked = 1;
        size_t swaps = rng() % 6;
        for (size_t s = 0; s < swaps; ++s) {
            size_t i = rng() % n;
            size_t j = rng() % n;
            if (i == j)
                continue;
            if (i > j)
                std::swap(i, j);
            // adjacent-transposition chain i..j..i gives the Koszul sign of
            // swapping slots i and j directly
            for (size_t k = i; k < j; ++k) {
                tracked *= (degs[perm[k]] * degs[perm[k + 1]]) % 2 ? -1 : 1;
                std::swap(perm[k], perm[k + 1]);
            }
            for (size_t k = j - 1; k-- > i;) {
                tracked *= (degs[perm[k]] * degs[perm[k + 1]]) % 2 ? -1 : 1;
                std::swap(perm[k], perm[k + 1]);
            }
        }
        CHECK(koszul_permutation_sign(degs, perm) == tracked);
    }
}

TEST_CASE("exterior algebra: primitive square cancels under koszul signs") {
    auto A = ext();
    Tensor dt = A->coproduct("t");  // t(x)1 + 1(x)t
    CHECK(slotwise_product(*A, dt, dt).is_zero());
}

TEST_CASE("bialgebra axioms pass for built-ins") {
    Window w;
    CHECK(check_bialgebra_axioms(*z2(), w).all_pass());
    CHECK(check_bialgebra_axioms(*ext(), w).all_pass());
    auto s3 = std::make_shared<FiniteGroupFunctionHopf>(FiniteGroupFunctionHopf::s3_table(),
                                                        "s3-functions");
    CHECK(check_bialgebra_axioms(*s3, w).all_pass());

    Window wide;
    wide.exp_bound = 2;
    wide.z_bound = 2;
    CHECK(check_bialgebra_axioms(*ut(), wide).all_pass());
}

TEST_CASE("corrupted coproduct is caught with a witness") {
    auto broken = std::make_shared<BrokenCoproduct>();
    Window w;
    w.exp_bound = 1;
    w.z_bound = 2;
    auto rep = check_bialgebra_axioms(*broken, w);
    CHECK(!rep.all_pass());
    bool coassoc_failed = false;
    for (const auto& c : rep.checks)
        if ((c.id == "comul-coassociative" || c.id == "counit-law") && !c.pass) {
            coassoc_failed = true;
            CHECK(!c.witness.empty());
        }
    CHECK(coassoc_failed);
    CHECK(!simplicial_identities_check(*broken, 3, w).all_pass());
}

TEST_CASE("faces on the upper triangular algebra") {
    auto A = ut();
    Tensor z = Tensor::term(Word::single(UpperTriangularHopf::label(0, 0, 1)));
    // unit insertions
    Tensor f0 = apply_face(*A, z, 0);
    CHECK(f0 == Tensor::term(Word({UpperTriangularHopf::label(0, 0, 0),
                                   UpperTriangularHopf::label(0, 0, 1)})));
    Tensor f2 = apply_face(*A, z, 2);
    CHECK(f2 == Tensor::term(Word({UpperTriangularHopf::label(0, 0, 1),
                                   UpperTriangularHopf::label(0, 0, 0)})));
    // coproduct slot: x(x)z + z(x)y
    Tensor f1 = apply_face(*A, z, 1);
    Tensor expect;
    expect.add(Word({UpperTriangularHopf::label(1, 0, 0), UpperTriangularHopf::label(0, 0, 1)}),
               Rational(1));
    expect.add(Word({UpperTriangularHopf::label(0, 0, 1), UpperTriangularHopf::label(0, 1, 0)}),
               Rational(1));
    CHECK(f1 == expect);
    CHECK_THROWS_AS(apply_face(*A, z, 3), std::out_of_range);
}

TEST_CASE("degeneracies apply the counit slotwise") {
    auto A = ut();
    Tensor z = Tensor::term(Word::single(UpperTriangularHopf::label(0, 0, 1)));
    Tensor x = Tensor::term(Word::single(UpperTriangularHopf::label(1, 0, 0)));
    CHECK(apply_degeneracy(*A, z, 0).is_zero());           // eps(z) = 0
    CHECK(apply_degeneracy(*A, x, 0) == Tensor::term(Word()));  // eps(x) = 1
    Tensor xz = concat(x, z);
    CHECK(apply_degeneracy(*A, xz, 0) == z);               // eps in slot 0
    CHECK_THROWS_AS(apply_degeneracy(*A, xz, 2), std::out_of_range);
}

TEST_CASE("cosimplicial identities hold on built-ins") {
    Window w;
    w.exp_bound = 1;
    w.z_bound = 1;
    CHECK(simplicial_identities_check(*z2(), 3, w).all_pass());
    CHECK(simplicial_identities_check(*ext(), 3, w).all_pass());
    CHECK(simplicial_identities_check(*ut(), 3, w).all_pass());
}

TEST_CASE("iterated coproduct and coassociativity") {
    auto A = ut();
    auto zl = UpperTriangularHopf::label(0, 0, 1);
    Tensor z = Tensor::term(Word::single(zl));
    CHECK(iterated_coproduct(*A, z, 0) == z);
    CHECK(iterated_coproduct(*A, z, 1) == A->coproduct(zl));
    // Delta^2(z) = x(x)x(x)z + x(x)z(x)y + z(x)y(x)y
    Tensor d2 = iterated_coproduct(*A, z, 2);
    Tensor expect;
    auto X = UpperTriangularHopf::label(1, 0, 0);
    auto Y = UpperTriangularHopf::label(0, 1, 0);
    expect.add(Word({X, X, zl}), Rational(1));
    expect.add(Word({X, zl, Y}), Rational(1));
    expect.add(Word({zl, Y, Y}), Rational(1));
    CHECK(d2 == expect);
}

TEST_CASE("slotwise product carries the koszul sign") {
    auto A = ext();
    // (1(x)t)(t(x)1) = -(t(x)t), (t(x)1)(1(x)t) = +(t(x)t)
    Tensor u = Tensor::term(Word({"1", "t"}));
    Tensor v = Tensor::term(Word({"t", "1"}));
    CHECK(slotwise_product(*A, u, v) == Tensor::term(Word({"t", "t"}), Rational(-1)));
    CHECK(slotwise_product(*A, v, u) == Tensor::term(Word({"t", "t"}), Rational(1)));
}

TEST_CASE("group table validation") {
    CHECK_THROWS(FiniteGroupFunctionHopf({{0, 1}, {1, 1}}));  // not a group
    auto t = FiniteGroupFunctionHopf::cyclic_table(3);
    FiniteGroupFunctionHopf g(t, "z3");
    CHECK(g.order() == 3);
}
