#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mdh/mdcurve.hpp"
#include "testutil.hpp"

using namespace mdh;

namespace {

// every structural fact the construction promises, checked against the tree
void check_diagram_invariants(const Curve& c) {
    const EggersWallTree t = build_tree(c);
    const FramedDiagram f = md_diagram(c);
    CHECK_NOTHROW(validate_framed(f));

    // ranks match slice point counts at every probe height
    std::vector<ExtRat> probes = {ExtRat(1)};
    for (const Rat& h : t.interior_heights()) {
        probes.push_back(ExtRat(h));
        probes.push_back(ExtRat(h + 1));
    }
    probes.push_back(ExtRat::infinity());
    for (const ExtRat& b : probes) {
        const int l = static_cast<int>(level_slice(t, b).points.size());
        CHECK(evaluate(f.deg0, b) == l);
        CHECK(evaluate(f.deg1, b) == l);
    }
    CHECK(evaluate(f.deg0, ExtRat(1, 3)) == 1);
    CHECK(evaluate(f.deg1, ExtRat(1, 3)) == 0);
    CHECK(evaluate(f.deg0, ExtRat::infinity()) == static_cast<int>(c.branches.size()));

    // degree-0 steps: one 1 per column; degree-1: positive on that support
    for (std::size_t j = 1; j < f.deg0.steps.size(); ++j) {
        const IntMatrix& m0 = f.deg0.steps[j];
        const IntMatrix& m1 = f.deg1.steps[j];
        for (int col = 0; col < m0.cols(); ++col) {
            Int ones = 0;
            for (int r = 0; r < m0.rows(); ++r) {
                CHECK((m0.at(r, col) == 0 || m0.at(r, col) == 1));
                if (m0.at(r, col) == 1) {
                    ++ones;
                    CHECK(m1.at(r, col) >= 1);
                } else {
                    CHECK(m1.at(r, col) == 0);
                }
            }
            CHECK(ones == 1);
        }
    }

    // jump set = {1} + interior vertex heights
    std::vector<Rat> expect = t.interior_heights();
    if (expect.empty() || expect.front() != 1) expect.insert(expect.begin(), Rat(1));
    CHECK(jumping_rates(f) == expect);

    // framed round trip rebuilds the labeled tree
    CHECK(tree_isomorphic(reconstruct_tree(f), t, true));
}

} // namespace

TEST_CASE("staircase structure on the fixtures") {
    check_diagram_invariants(testutil::eggers_example());
    check_diagram_invariants(testutil::reducible_C());
    check_diagram_invariants(testutil::reducible_D());
    check_diagram_invariants(testutil::make_curve({{"A", "x^(3/2)"}}));
    check_diagram_invariants(testutil::make_curve({{"A", "x + x^2"}}));
    check_diagram_invariants(testutil::make_curve({{"A", "x"}, {"B", "2x"}, {"C", "3x"}}));
    check_diagram_invariants(testutil::make_curve({{"A", "x^(3/2) + x^(7/4)"}}));
    check_diagram_invariants(
        testutil::make_curve({{"A", "x + x^(3/2)"}, {"B", "x - x^(3/2)"}, {"C", "2x + x^(7/3)"}}));
}

TEST_CASE("four-branch example reproduces the rank and multiplier data") {
    FramedDiagram f = md_diagram(testutil::eggers_example());
    CHECK(f.inf_basis == std::vector<std::string>{"C1", "C2", "C3", "C4"});
    CHECK(f.one_basis == std::vector<std::string>{"T1"});

    const ExtRat b1(11, 4), b2(3, 2);
    CHECK(evaluate(f.deg1, b1) == 3);
    CHECK(evaluate(f.deg1, b2) == 2);
    CHECK(morphism_matrix(f.deg0, b1, b2) == IntMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
    CHECK(morphism_matrix(f.deg1, b1, b2) == IntMatrix::from_rows({{1, 2, 0}, {0, 0, 4}}));

    // multiplicities 2, 4, 12, 4 down to the single tangent line
    CHECK(morphism_matrix(f.deg1, ExtRat::infinity(), ExtRat(1)) ==
          IntMatrix::from_rows({{2, 4, 12, 4}}));
}

TEST_CASE("reducible example reproduces the composite matrices") {
    FramedDiagram fc = md_diagram(testutil::reducible_C());
    FramedDiagram fd = md_diagram(testutil::reducible_D());
    CHECK(fc.inf_basis == std::vector<std::string>{"C1", "C2", "C3", "C4", "C5"});
    CHECK(fc.one_basis == std::vector<std::string>{"T1", "T2"});

    const ExtRat hi(5, 2), lo(3, 2);
    CHECK(morphism_matrix(fc.deg1, hi, lo) ==
          IntMatrix::from_rows({{2, 1, 0, 0, 0}, {0, 0, 1, 1, 1}}));
    CHECK(morphism_matrix(fd.deg1, hi, lo) ==
          IntMatrix::from_rows({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 2}}));
    CHECK(morphism_matrix(fc.deg1, ExtRat::infinity(), ExtRat(1)) ==
          morphism_matrix(fc.deg1, hi, lo));
    CHECK(morphism_matrix(fc.deg0, hi, lo) ==
          IntMatrix::from_rows({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}}));
}

TEST_CASE("irreducible branches compose multipliers across intervals") {
    FramedDiagram f = md_diagram(testutil::make_curve({{"A", "x^(3/2)"}}));
    CHECK(morphism_matrix(f.deg1, ExtRat(3, 2), ExtRat(1)) == IntMatrix::from_rows({{2}}));
    CHECK(morphism_matrix(f.deg0, ExtRat(3, 2), ExtRat(1)) == IntMatrix::from_rows({{1}}));

    // (3/2, 7/4) has kappa = 4; crossing both jumps multiplies by 4
    FramedDiagram g = md_diagram(testutil::make_curve({{"A", "x^(3/2) + x^(7/4)"}}));
    CHECK(g.deg1.breakpoints == std::vector<Rat>{Rat(1), Rat(3, 2), Rat(7, 4)});
    CHECK(morphism_matrix(g.deg1, ExtRat::infinity(), ExtRat(1)) ==
          IntMatrix::from_rows({{4}}));
    CHECK(morphism_matrix(g.deg1, ExtRat(7, 4), ExtRat(8, 5)) == IntMatrix::from_rows({{2}}));
    CHECK(morphism_matrix(g.deg0, ExtRat::infinity(), ExtRat(1)) == IntMatrix::from_rows({{1}}));
}

TEST_CASE("tangent lines and relative multiplicities") {
    MultiplicityReport r = relative_multiplicities(testutil::make_curve({{"A", "x^(3/2)"}}));
    REQUIRE(r.tangents.size() == 1);
    CHECK(r.tangents[0].tangent.slope == GaussRat(0));
    CHECK(r.tangents[0].tangent.id == "T1");
    CHECK(r.tangents[0].branches ==
          std::vector<std::pair<std::string, Int>>{{"A", Int(2)}});
    CHECK(r.tangents[0].total == 2);

    r = relative_multiplicities(testutil::make_curve({{"A", "x + x^2"}}));
    REQUIRE(r.tangents.size() == 1);
    CHECK(r.tangents[0].tangent.slope == GaussRat(1));
    CHECK(r.tangents[0].total == 1);

    r = relative_multiplicities(testutil::reducible_C());
    REQUIRE(r.tangents.size() == 2);
    CHECK(r.tangents[0].tangent.slope == GaussRat(1));
    CHECK(r.tangents[0].branches ==
          std::vector<std::pair<std::string, Int>>{{"C1", Int(2)}, {"C2", Int(1)}});
    CHECK(r.tangents[0].total == 3);
    CHECK(r.tangents[1].tangent.slope == GaussRat(2));
    CHECK(r.tangents[1].total == 3);

    // totals are the row sums of the framed h^{inf,1} in degree 1
    for (const Curve& c : {testutil::eggers_example(), testutil::reducible_C(),
                           testutil::reducible_D()}) {
        FramedDiagram f = md_diagram(c);
        IntMatrix m = morphism_matrix(f.deg1, ExtRat::infinity(), ExtRat(1));
        MultiplicityReport rep = relative_multiplicities(c);
        REQUIRE(static_cast<int>(rep.tangents.size()) == m.rows());
        for (int row = 0; row < m.rows(); ++row) {
            Int sum = 0;
            for (int col = 0; col < m.cols(); ++col) sum += m.at(row, col);
            CHECK(rep.tangents[static_cast<std::size_t>(row)].total == sum);
        }
    }
}

TEST_CASE("tree reconstruction tells C and D apart") {
    Curve c = testutil::reducible_C();
    Curve d = testutil::reducible_D();
    EggersWallTree tc = build_tree(c);
    EggersWallTree td = build_tree(d);
    CHECK(tree_isomorphic(reconstruct_tree(md_diagram(c)), tc, true));
    CHECK(tree_isomorphic(reconstruct_tree(md_diagram(d)), td, true));
    CHECK_FALSE(tree_isomorphic(reconstruct_tree(md_diagram(d)), tc, false));
}

TEST_CASE("smoothness detection") {
    CHECK(detect_smooth(md_diagram(testutil::make_curve({{"A", "x + x^2"}}))));
    CHECK(detect_smooth(md_diagram(testutil::make_curve({{"A", "x"}}))));
    CHECK_FALSE(detect_smooth(md_diagram(testutil::make_curve({{"A", "x^(3/2)"}}))));
    CHECK_FALSE(detect_smooth(md_diagram(testutil::make_curve({{"A", "x"}, {"B", "2x"}}))));
    CHECK_FALSE(detect_smooth(md_diagram(testutil::eggers_example())));
}
