#include <doctest.h>

#include "tromino/characterize.hpp"
#include "tromino/count.hpp"
#include "tromino/solver.hpp"

using namespace tromino;

TEST_CASE("solve_exact on the classic boards") {
    CHECK_FALSE(solve_exact(DeficientBoard(3, 3)).has_value());
    const auto tiled = solve_exact(DeficientBoard(2, 3));
    REQUIRE(tiled.has_value());
    CHECK(validate_tiling(*tiled).ok);
    CHECK(tiled->placements.size() == 2);
    // a pair both of whose cells have an even coordinate is bad on 5x7
    CHECK_FALSE(solve_exact(DeficientBoard(5, 7, {{2, 2}, {2, 3}})).has_value());
}

TEST_CASE("solver determinism") {
    const DeficientBoard b(5, 9);
    const auto a = solve_exact(b);
    const auto c = solve_exact(b);
    REQUIRE(a.has_value());
    CHECK(a->placements == c->placements);
}

TEST_CASE("cell cap") {
    CHECK_THROWS_AS(solve_exact(DeficientBoard(14, 14)), Error);
    SolveOptions raised;
    raised.cell_cap = 200;
    CHECK(solve_exact(DeficientBoard(14, 14, {{1, 1}}), raised).has_value() ==
          decide(DeficientBoard(14, 14, {{1, 1}})).tileable);
    CHECK_THROWS_AS(enumerate_tilings(DeficientBoard(14, 14)), Error);
}

TEST_CASE("domino budget") {
    SolveOptions mixed;
    mixed.domino_budget = 1;
    const auto t = solve_exact(DeficientBoard(2, 4), mixed);
    REQUIRE(t.has_value());
    CHECK(validate_tiling(*t).ok);
    int dominoes = 0;
    for (const Placement& p : t->placements)
        if (!is_tromino(p.kind)) ++dominoes;
    CHECK(dominoes == 1);
    // trominoes alone cannot tile an area of 8
    CHECK_FALSE(solve_exact(DeficientBoard(2, 4)).has_value());
}

TEST_CASE("enumeration order, limit, and count agreement") {
    const DeficientBoard b(2, 3);
    const auto all = enumerate_tilings(b);
    CHECK(all.size() == 2);
    CHECK(enumerate_tilings(b, 1).size() == 1);
    CHECK(enumerate_tilings(b, 1)[0].placements == all[0].placements);
    for (const Tiling& t : all) CHECK(validate_tiling(t).ok);

    const DeficientBoard corner(2, 4, {{1, 1}, {2, 1}});
    CHECK(BigCount(static_cast<long>(enumerate_tilings(corner).size())) ==
          count_tromino(corner));
    CHECK(enumerate_tilings(DeficientBoard(4, 5, {{2, 3}, {3, 3}})).empty());
}
