#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "f4grad/jordan.hpp"
#include "f4grad/octonion.hpp"

using namespace f4grad;

TEST_CASE("automorphism predicate") {
    const auto& J = albert();
    CHECK(is_automorphism(AlgebraMap::identity(J)));
    // diag(2,1,...,1) on C breaks e1 e1 = e1
    std::vector<Cyc> d(8, Cyc(1));
    d[0] = Cyc(2);
    CHECK(!is_automorphism(AlgebraMap::diagonal(cayley(), d)));
    CHECK(is_automorphism(cayley_f0()));
}

TEST_CASE("derivation algebra dimensions") {
    // Der(C) = g2, dimension 14
    auto derC = derivation_algebra(cayley());
    CHECK((int)derC.ops.size() == 14);
    std::string why;
    CHECK(derC.lie.check_flavor(&why)); // anticommutativity + Jacobi, exhaustive
    // each op is a derivation; conjugates by automorphisms stay derivations
    auto f0 = cayley_f0();
    auto f0i = f0.inverse();
    for (int k = 0; k < 3; ++k) {
        auto d = AlgebraMap::from_rat(cayley(), derC.ops[k]);
        CHECK(is_derivation(d));
        AlgebraMap conj{cayley(), (f0.m * d.m * f0i.m).eval()};
        CHECK(is_derivation(conj));
    }
    // one-dimensional algebra has no derivations
    AlgebraTable F;
    F.init("F", 1, Flavor::Jordan);
    F.set_product(0, 0, {{0, Rat(1)}});
    CHECK(full_derivation_solve(F).empty());
}

TEST_CASE("fixed subalgebra basics") {
    const auto& C = cayley();
    auto all = fixed_subalgebra(C, {AlgebraMap::identity(C)});
    CHECK(all.dim() == 8);
    // fixed algebra of the Z2^3 generators on C is the span of 1
    auto fix = fixed_subalgebra(C, cayley_z23_generators());
    CHECK(fix.dim() == 1);
}

TEST_CASE("lie rank") {
    // abelian 4-dim algebra: ad = 0, rank 4
    AlgebraTable ab;
    ab.init("ab4", 4, Flavor::Lie);
    CHECK(lie_rank(ab) == 4);
    // Der(C) = g2 has rank 2
    auto derC = derivation_algebra(cayley());
    CHECK(lie_rank(derC.lie) == 2);
}

TEST_CASE("cubic coefficients") {
    const auto& J = albert();
    auto unit = albert_unit();
    auto trace = [](const std::vector<Cyc>& v) { return v[0] + v[1] + v[2]; };
    // x = E1: Tr = 1, Q = 0, N = 0 and the cubic identity holds
    std::vector<Cyc> x(27, Cyc(0));
    x[0] = Cyc(1);
    auto f = cubic_via_trace(J, unit, trace, x);
    CHECK(f.identity);
    CHECK(f.tr == Cyc(1));
    CHECK(f.q == Cyc(0));
    CHECK(f.n == Cyc(0));
    // unit: x^3 - 3x^2 + 3x - 1 = 0
    f = cubic_via_trace(J, unit, trace, unit);
    CHECK(f.identity);
    CHECK(f.tr == Cyc(3));
    CHECK(f.q == Cyc(3));
    CHECK(f.n == Cyc(1));
    // generic element: the linear-solve route agrees where determined
    for (int k = 0; k < 27; ++k) x[k] = Cyc(rat((k * 7) % 11 - 5, 3));
    f = cubic_via_trace(J, unit, trace, x);
    CHECK(f.identity);
    auto c = cubic_coefficients(J, unit, x);
    REQUIRE(c.has_value());
    CHECK(c->tr == f.tr);
    CHECK(c->q == f.q);
    CHECK(c->n == f.n);
}

TEST_CASE("minimal polynomial and squarefree check") {
    MatC m(3, 3);
    m.setConstant(Cyc(0));
    m(0, 0) = Cyc(1);
    m(1, 1) = Cyc(1);
    m(2, 2) = Cyc(-1);
    auto mu = minimal_polynomial(m);
    CHECK(mu.size() == 3); // (x-1)(x+1)
    CHECK(squarefree(mu));
    MatC nil(2, 2);
    nil.setConstant(Cyc(0));
    nil(0, 1) = Cyc(1);
    auto mu2 = minimal_polynomial(nil);
    CHECK(mu2.size() == 3); // x^2
    CHECK(!squarefree(mu2));
}
