#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "f4grad/gradings.hpp"
#include "f4grad/jordan.hpp"
#include "f4grad/octonion.hpp"
#include "f4grad/weyl.hpp"

using namespace f4grad;

TEST_CASE("grad1 grading and universal group") {
    auto g = preset_grading("grad1");
    std::string why;
    CHECK(check_grading_closure(g, &why));
    CHECK(grading_type(g) == std::vector<int>{0, 0, 7, 0, 0, 1});
    auto ug = universal_group(g);
    CHECK(ug == AbelianGroup{0, {2, 2, 2}});
    auto t = torality(g);
    CHECK(!t.toral);
    CHECK(t.zero_dim == 3);
    CHECK(matches_fixture(g, fixture_by_name("grad1"), &why));
}

TEST_CASE("ztrescubo fixture erratum and grading") {
    auto f = fixture_by_name("ztrescubo");
    auto v = validate_fixture(f);
    CHECK(v.closed);
    REQUIRE(v.errata.size() == 1);
    CHECK(v.errata[0].find("v1(2)") != std::string::npos);
    CHECK(v.errata[0].find("v1(1)") != std::string::npos);
    auto g = preset_grading("ztrescubo");
    std::string why;
    CHECK(check_grading_closure(g, &why));
    CHECK((int)g.comps.size() == 27);
    CHECK(grading_type(g) == std::vector<int>{27});
    CHECK(universal_group(g) == AbelianGroup{0, {3, 3, 3}});
    CHECK(matches_fixture(g, v.validated, &why));
    CHECK(!torality(g).toral);
    // every homogeneous spanning element is invertible: N != 0
    auto unit = albert_unit();
    auto trace = [](const std::vector<Cyc>& x) { return x[0] + x[1] + x[2]; };
    for (const auto& c : g.comps) {
        auto fz = cubic_via_trace(albert(), unit, trace, c.basis[0]);
        CHECK(fz.identity);
        CHECK(!fz.n.is_zero());
    }
}

TEST_CASE("clean fixtures validate without errata") {
    for (const char* name : {"grad1", "nt1", "nt2", "nt4", "nt5", "coar", "mm2", "gr1", "gr2",
                             "gr3", "gr4", "gr5", "A15", "A105", "A405"}) {
        auto v = validate_fixture(fixture_by_name(name));
        CHECK(v.closed);
        CHECK(v.errata.empty());
    }
}

TEST_CASE("printed tables with flagged errata") {
    // nt3: one copy slip, corrected from the registered erratum
    auto v3 = validate_fixture(fixture_by_name("nt3"));
    CHECK(v3.closed);
    REQUIRE(v3.errata.size() == 1);
    CHECK(v3.errata[0].find("u3+v3") != std::string::npos);
    // pauli: the diagonal rows carry sign slips; each is a one-term flip
    auto vp = validate_fixture(fixture_by_name("pauli"));
    CHECK(vp.closed);
    CHECK(!vp.errata.empty());
    // the corrected table is the computed Pauli grading
    auto [f, g] = pauli_pair_on_m3();
    auto gp = grading_from_automorphisms("pauli", m3f(), {f, g});
    std::string why;
    CHECK(matches_fixture(gp, vp.validated, &why));
}

TEST_CASE("albert nontoral types from constructive sets") {
    struct Row {
        const char* name;
        std::vector<int> type;
    };
    for (const Row& r : {Row{"nt1", {25, 1}}, Row{"nt3", {21, 3}}, Row{"nt4", {23, 2}},
                         Row{"nt5", {24, 0, 1}}}) {
        auto g = preset_grading(r.name);
        CHECK(grading_type(g) == r.type);
        std::string why;
        CHECK(check_grading_closure(g, &why));
        CHECK(!torality(g).toral);
        CHECK(matches_fixture(g, validate_fixture(fixture_by_name(r.name)).validated, &why));
    }
    auto nt2 = preset_grading("nt2");
    CHECK(grading_type(nt2) == std::vector<int>{7, 8, 0, 1});

    // coar: type, spans and universal group as printed. The printed
    // generator set {hat t_{1,-1}, hat t_{-1,1}, tilde tau_{0,1}} however
    // fixes a four-dimensional abelian subalgebra of f4 (all ad-semisimple,
    // confirmed by two independent routes), i.e. a Cartan, so THIS
    // representative is toral -- the printed rank-3 remark does not hold
    // for it. Flagged as an erratum; the II.4 representatives stay nontoral.
    auto c = preset_grading("coar");
    CHECK(grading_type(c) == std::vector<int>{0, 12, 1});
    std::string why;
    CHECK(check_grading_closure(c, &why));
    CHECK(matches_fixture(c, validate_fixture(fixture_by_name("coar")).validated, &why));
    CHECK(universal_group(c) == AbelianGroup{0, {2, 2, 4}});
    auto tc = torality(c);
    CHECK(tc.zero_dim == 4);
    CHECK(tc.toral);
    auto L = zero_component_in_f4(c);
    for (int i = 0; i < L.dim(); ++i)
        for (int j2 = 0; j2 < L.dim(); ++j2) CHECK(L.prod[i][j2].empty());
}

TEST_CASE("cartan gradings") {
    auto g = preset_grading("cartan");
    CHECK(grading_type(g) == std::vector<int>{48, 0, 0, 1});
    CHECK(universal_group(g) == AbelianGroup{4, {}});
    auto t = torality(g);
    CHECK(t.toral);
    CHECK(t.zero_dim == 4);
    std::string why;
    CHECK(check_grading_closure(g, &why));

    auto gj = preset_grading("cartanJ");
    CHECK(grading_type(gj) == std::vector<int>{24, 0, 1});
    CHECK(check_grading_closure(gj, &why));
    CHECK(matches_fixture(gj, fixture_by_name("mm2"), &why));
    CHECK(torality(gj).toral);
}

TEST_CASE("A(j,id) types and fine gradings") {
    auto a15 = preset_grading("A15");
    CHECK(grading_type(a15) == std::vector<int>{0, 26});
    auto t15 = torality(a15);
    CHECK(!t15.toral);
    CHECK(t15.zero_dim == 0);
    std::string why;
    // the printed Section 7.1 table uses the paper's own lift of sigma_15,
    // which differs from ours by a torus element; certify the fixture as the
    // A(15, t)-grading for that representative
    CHECK(fixture_in_lift_coset(fixture_by_name("A15"), 15, 0, &why));
    CHECK(universal_group(a15) == AbelianGroup{0, {3, 3, 3}});
    {
        auto fx = fixture_by_name("A15");
        Grading gf;
        gf.alg = fx.alg;
        gf.name = "A15-fixture";
        gf.moduli = fx.moduli;
        for (const auto& cc : fx.comps) {
            Grading::Comp c2;
            c2.label = cc.label;
            for (const auto& s2 : cc.spans) c2.basis.push_back(parse_element(*fx.alg, s2));
            gf.comps.push_back(std::move(c2));
        }
        CHECK(grading_type(gf) == std::vector<int>{0, 26});
        CHECK(universal_group(gf) == AbelianGroup{0, {3, 3, 3}});
    }

    auto a105 = preset_grading("A105");
    CHECK(grading_type(a105) == std::vector<int>{31, 0, 7});
    CHECK(torality(a105).zero_dim == 1);
    CHECK(matches_fixture(a105, fixture_by_name("A105"), &why));
    CHECK(!torality(a105).toral);
    // universal group Z2^3 x Z: free rank 1, factors (2,2,2)
    CHECK(universal_group(a105) == AbelianGroup{1, {2, 2, 2}});

    auto a405 = preset_grading("A405");
    CHECK(grading_type(a405) == std::vector<int>{24, 0, 0, 7});
    CHECK(torality(a405).zero_dim == 0);
    CHECK(matches_fixture(a405, fixture_by_name("A405"), &why));
    CHECK(universal_group(a405) == AbelianGroup{0, {2, 2, 2, 2, 2}});

    auto a3 = preset_grading("A3");
    CHECK(grading_type(a3) == std::vector<int>{19, 6, 7});
    CHECK(universal_group(a3) == AbelianGroup{0, {2, 2, 8}});
    auto a106 = preset_grading("A106");
    CHECK(grading_type(a106) == std::vector<int>{3, 14, 7});
    CHECK(torality(a106).zero_dim == 1);
}

TEST_CASE("toral representative with six-dimensional zero component") {
    auto g = preset_grading("A110");
    auto t = torality(g);
    CHECK(t.zero_dim == 6);
    CHECK(t.zero_rank == 4);
    CHECK(t.toral);
    // the paper's printed y-basis (fixed space of its own lift choice) is a
    // six-dimensional subalgebra of rank 4 whose center contains the three
    // differences, exactly as the proof argues
    const char* ys[6] = {"b3 - b10 + b27 + b34",  "-b4 + b22 + b28 + b46", "-b7 - b18 - b31 + b42",
                         "b13 - b23 - b37 + b47", "b16 - b20 - b40 + b44", "b15 - b24 - b39 + b48"};
    std::vector<std::vector<Cyc>> rows;
    for (const char* y : ys) rows.push_back(parse_element(f4model().lie(), y));
    auto Ly = close_span(f4model().lie(), rows);
    CHECK(Ly.dim() == 6);
    CHECK(lie_rank(Ly) == 4);
    // center contains y1-y6, y2-y5, y3-y4
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 5}, {1, 4}, {2, 3}}) {
        std::vector<Cyc> z(52, Cyc(0));
        for (int k = 0; k < 52; ++k) z[k] = rows[a][k] - rows[b][k];
        // [z, y_i] = 0 for all basis elements of Ly
        for (int i = 0; i < 6; ++i) {
            auto br = f4model().lie().mul(z, Ly.basis[i]);
            for (const auto& vv : br) CHECK(vv.is_zero());
        }
    }
}

TEST_CASE("main2 rows") {
    struct Row {
        const char* name;
        std::vector<int> type;
        AbelianGroup group;
    };
    for (const Row& r : {Row{"II1", {0, 0, 1, 0, 0, 0, 7}, {0, {2, 2, 2}}},
                         Row{"II2", {1, 8, 0, 0, 7}, {0, {2, 2, 2, 2}}},
                         Row{"II31", {3, 14, 7}, {0, {2, 2, 6}}},
                         Row{"II32", {17, 7, 7}, {0, {2, 2, 2, 4}}},
                         Row{"II41", {0, 8, 2, 0, 6}, {0, {2, 2, 4}}},
                         Row{"II42", {19, 6, 7}, {0, {2, 2, 8}}}}) {
        auto g = preset_grading(r.name);
        CHECK(grading_type(g) == r.type);
        CHECK(universal_group(g) == r.group);
        CHECK(!torality(g).toral);
    }
}

TEST_CASE("coarsening") {
    auto nt4 = preset_grading("nt4");
    // identity coarsening
    auto same = coarsen(nt4, {{0, 2}, {1, 2}, {2, 2}, {3, 4}}, "same");
    CHECK(grading_type(same) == grading_type(nt4));
    // forgetting the f0 slot gives coar
    auto c = coarsen(nt4, {{0, 2}, {1, 2}, {3, 4}}, "coar-from-nt4");
    CHECK(grading_type(c) == std::vector<int>{0, 12, 1});
    std::string why;
    CHECK(matches_fixture(c, fixture_by_name("coar"), &why));
    // Z -> Z4 reduction of the infinite slot of A105 gives the II.3.2 type
    auto a105 = preset_grading("A105");
    auto ii32 = coarsen(a105, {{0, 2}, {1, 2}, {2, 2}, {3, 4}}, "a105-mod4");
    CHECK(grading_type(ii32) == std::vector<int>{17, 7, 7});
    // bad modulus rejected
    CHECK_THROWS_AS((void)coarsen(nt4, {{3, 3}}, "bad"), NotHomomorphic);
    // coarsening universal group is a quotient: sizes divide
    auto ug_fine = universal_group(nt4);
    auto ug_coarse = universal_group(c);
    long long fine_tor = 1, coarse_tor = 1;
    for (auto d : ug_fine.factors) fine_tor *= d;
    for (auto d : ug_coarse.factors) coarse_tor *= d;
    CHECK(ug_coarse.torus_rank <= ug_fine.torus_rank);
    CHECK(fine_tor % coarse_tor == 0);
}

TEST_CASE("h3f grading presets") {
    struct Row {
        const char* name;
        std::vector<int> type;
    };
    for (const Row& r : {Row{"gr1", {4, 1}}, Row{"gr2", {0, 1, 0, 1}}, Row{"gr3", {0, 3}},
                         Row{"gr4", {2, 2}}, Row{"gr5", {3, 0, 1}}}) {
        auto g = preset_grading(r.name);
        CHECK(grading_type(g) == r.type);
        std::string why;
        CHECK(check_grading_closure(g, &why));
        CHECK(matches_fixture(g, fixture_by_name(r.name), &why));
    }
}

TEST_CASE("semisimplicity of homogeneous elements in the A15 grading") {
    auto g = preset_grading("A15");
    const auto& L = f4model().lie();
    int checked = 0;
    for (const auto& c : g.comps)
        for (const auto& x : c.basis) {
            MatC ad(52, 52);
            ad.setConstant(Cyc(0));
            for (int j = 0; j < 52; ++j)
                for (int i = 0; i < 52; ++i) {
                    if (x[i].is_zero()) continue;
                    for (const auto& [k, cc] : L.prod[i][j]) ad(k, j) += x[i] * Cyc(cc);
                }
            auto mu = minimal_polynomial(ad);
            CHECK(squarefree(mu));
            ++checked;
        }
    CHECK(checked == 52);
}
