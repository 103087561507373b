#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "f4grad/cyclotomic.hpp"
#include "f4grad/eigensplit.hpp"
#include "f4grad/intlinalg.hpp"
#include "f4grad/linalg.hpp"

using namespace f4grad;

TEST_CASE("cyclotomic arithmetic") {
    const Cyc i = Cyc::i(), w = Cyc::omega(), xi = Cyc::zeta(3);
    CHECK(i * i == Cyc(-1));
    CHECK(w * w + w + Cyc(1) == Cyc(0));
    Cyc xi8(1);
    for (int k = 0; k < 8; ++k) xi8 *= xi;
    CHECK(xi8 == Cyc(1));
    Cyc xi4(1);
    for (int k = 0; k < 4; ++k) xi4 *= xi;
    CHECK(xi4 == Cyc(-1));
    Cyc z24(1);
    for (int k = 0; k < 24; ++k) z24 *= Cyc::zeta(1);
    CHECK(z24 == Cyc(1));
    CHECK(Cyc::sqrt3() * Cyc::sqrt3() == Cyc(3));
    CHECK(Cyc::zeta(12) == Cyc(-1));
}

TEST_CASE("cyclotomic exact inverses") {
    std::vector<Cyc> samples = {Cyc(Rat(3, 7)),
                                Cyc::zeta(5),
                                Cyc::zeta(1) + Cyc(2),
                                Cyc::sqrt3() + Cyc::i(),
                                Cyc::omega() - Cyc(Rat(1, 2)),
                                Cyc::zeta(7) + Cyc::zeta(3) + Cyc(5)};
    for (const auto& a : samples) {
        REQUIRE(!a.is_zero());
        CHECK(a * a.inverse() == Cyc(1));
    }
}

TEST_CASE("cyclotomic parser") {
    CHECK(parse_cyc("1/2") == Cyc(Rat(1, 2)));
    CHECK(parse_cyc("-i") == -Cyc::i());
    CHECK(parse_cyc("w2") == Cyc::omega() * Cyc::omega());
    CHECK(parse_cyc("2+w") == Cyc(2) + Cyc::omega());
    CHECK(parse_cyc("(-1-2*w)") == Cyc(-1) - Cyc(2) * Cyc::omega());
    CHECK(parse_cyc("z^3") == Cyc::zeta(3));
    CHECK(parse_cyc("z^-3") == Cyc::zeta(21));
}

TEST_CASE("kernel of exact matrices") {
    MatC id3 = MatC::Identity(3, 3);
    CHECK(kernel_basis(id3).empty());
    MatC z2(2, 2);
    z2.setConstant(Cyc(0));
    CHECK(kernel_basis(z2).size() == 2);
}

TEST_CASE("row reducer coordinates and kernel") {
    RowReducer<Rat> red(4, true);
    red.add_row({Rat(1), Rat(2), Rat(0), Rat(1)});
    red.add_row({Rat(0), Rat(1), Rat(1), Rat(0)});
    CHECK(red.rank() == 2);
    auto t = red.coordinates({Rat(2), Rat(5), Rat(1), Rat(2)});
    REQUIRE(t.has_value());
    CHECK((*t)[0] == 2);
    CHECK((*t)[1] == 1);
    CHECK(!red.coordinates({Rat(0), Rat(0), Rat(1), Rat(1)}).has_value());
    auto ker = red.kernel();
    CHECK(ker.size() == 2);
    // kernel vectors are orthogonal to the absorbed rows
    for (const auto& k : ker) {
        CHECK(k[0] * 1 + k[1] * 2 + k[3] * 1 == 0);
        CHECK(k[1] + k[2] == 0);
    }
}

TEST_CASE("smith normal form basics") {
    IntMat id2 = IntMat::Identity(2, 2);
    auto sf = smith_normal_form(id2);
    CHECK(sf.S == id2);

    IntMat d(2, 2);
    d << 2, 0, 0, 4;
    sf = smith_normal_form(d);
    CHECK(sf.S(0, 0) == 2);
    CHECK(sf.S(1, 1) == 4);
}

TEST_CASE("smith normal form invariants on deterministic samples") {
    std::vector<IntMat> samples;
    {
        IntMat m(3, 3);
        m << 2, 4, 4, -6, 6, 12, 10, 4, 16;
        samples.push_back(m);
    }
    {
        IntMat m(3, 4);
        m << 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12;
        samples.push_back(m);
    }
    {
        IntMat m(4, 4);
        m << 0, -1, 2, 3, 7, 0, -5, 1, 2, 2, 2, 2, 1, 1, 0, -4;
        samples.push_back(m);
    }
    for (const auto& m : samples) {
        auto sf = smith_normal_form(m);
        CHECK(sf.U * m * sf.V == sf.S);
        CHECK(std::abs(det_int(sf.U)) == 1);
        CHECK(std::abs(det_int(sf.V)) == 1);
        auto d = sf.elementary_divisors();
        for (size_t k = 0; k + 1 < d.size(); ++k) CHECK(d[k + 1] % d[k] == 0);
        for (int r = 0; r < sf.S.rows(); ++r)
            for (int c = 0; c < sf.S.cols(); ++c)
                if (r != c) CHECK(sf.S(r, c) == 0);
    }
}

TEST_CASE("multiplicative kernel structure") {
    IntMat z4(4, 4);
    z4.setZero();
    auto g = multiplicative_kernel_structure(z4);
    CHECK(g.torus_rank == 4);
    CHECK(g.factors.empty());

    IntMat d(2, 2);
    d << 2, 0, 0, 0;
    g = multiplicative_kernel_structure(d);
    CHECK(g.torus_rank == 1);
    CHECK(g.factors == std::vector<long long>{2});

    // invariance under unimodular transforms
    IntMat m(3, 3);
    m << 2, 1, 0, 0, 3, 1, 0, 0, 0;
    IntMat u(3, 3), v(3, 3);
    u << 1, 1, 0, 0, 1, 0, 2, 0, 1;
    v << 1, 0, 3, 0, 1, 0, 0, 0, 1;
    CHECK(multiplicative_kernel_structure(m) == multiplicative_kernel_structure(u * m * v));

    auto gens = multiplicative_kernel_generators(d);
    CHECK(gens.continuous.size() == 1);
    CHECK(gens.torsion.size() == 1);
    CHECK(gens.torsion[0].second == 2);
}

TEST_CASE("simultaneous eigenspaces") {
    MatC id5 = MatC::Identity(5, 5);
    auto comps = simultaneous_eigenspaces({id5});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].dim() == 5);
    CHECK(comps[0].label == std::vector<int>{0});

    // two commuting diagonals
    MatC a(2, 2), b(2, 2);
    a.setConstant(Cyc(0));
    b.setConstant(Cyc(0));
    a(0, 0) = Cyc(1);
    a(1, 1) = Cyc(-1);
    b(0, 0) = Cyc::omega();
    b(1, 1) = Cyc::omega();
    comps = simultaneous_eigenspaces({a, b});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].label == std::vector<int>{0, 8});
    CHECK(comps[1].label == std::vector<int>{12, 8});

    // noncommuting pair
    MatC s(2, 2), t(2, 2);
    s.setConstant(Cyc(0));
    t.setConstant(Cyc(0));
    s(0, 1) = Cyc(1);
    s(1, 0) = Cyc(1);
    t(0, 0) = Cyc(1);
    t(1, 1) = Cyc(-1);
    CHECK_THROWS_AS((void)simultaneous_eigenspaces({s, t}), CommutatorNonzero);

    // eigenvalue outside the candidate set
    MatC two = MatC::Identity(1, 1) * Cyc(2);
    CHECK_THROWS_AS((void)simultaneous_eigenspaces({two}), EigenvalueOutsideCandidates);
}

TEST_CASE("matrix inverse and order") {
    MatC r(2, 2);
    r.setConstant(Cyc(0));
    r(0, 1) = -Cyc(1);
    r(1, 0) = Cyc(1); // rotation by 90 degrees
    auto rinv = inverse_of(r);
    CHECK(r * rinv == MatC::Identity(2, 2));
    CHECK(matrix_order(r) == 4);
}
