#include <doctest.h>

#include <random>

#include "tromino/construct.hpp"
#include "tromino/json_io.hpp"
#include "tromino/render.hpp"

using namespace tromino;

TEST_CASE("ascii grid") {
    Tiling t;
    t.board = DeficientBoard(2, 3);
    t.placements = {{PlacementKind::TrominoSE, {1, 1}, std::nullopt},
                    {PlacementKind::TrominoNW, {1, 2}, std::nullopt}};
    CHECK(ascii_grid(t) == "aab\nabb\n");

    Tiling deficient;
    deficient.board = DeficientBoard(2, 4, {{1, 1}, {2, 1}});
    deficient.placements = {{PlacementKind::TrominoSE, {1, 2}, std::nullopt},
                            {PlacementKind::TrominoNW, {1, 3}, std::nullopt}};
    CHECK(ascii_grid(deficient) == ".aab\n.abb\n");
}

TEST_CASE("ascii letters cycle") {
    const ConstructOutcome big = construct_tiling(DeficientBoard(13, 11, {{8, 1}, {8, 2}}));
    REQUIRE(big.ok());
    const std::string grid = ascii_grid(big.result->tiling);
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 13);
    CHECK(std::count(grid.begin(), grid.end(), '.') == 2);
    CHECK(grid.find('?') == std::string::npos);
}

TEST_CASE("svg output") {
    Tiling t;
    t.board = DeficientBoard(2, 4, {{1, 1}, {2, 1}});
    t.placements = {{PlacementKind::TrominoSE, {1, 2}, std::nullopt},
                    {PlacementKind::TrominoNW, {1, 3}, std::nullopt}};
    const std::string svg = render_svg(t);
    size_t rects = 0, pos = 0;
    while ((pos = svg.find("<rect", pos)) != std::string::npos) {
        ++rects;
        ++pos;
    }
    CHECK(rects == 6);  // m*n - |missing|
    size_t dots = 0;
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++dots;
        ++pos;
    }
    CHECK(dots == 2);
    CHECK(svg.find("width=\"96\"") != std::string::npos);  // 4 cells * 24 units
}

TEST_CASE("board and tiling JSON round trips") {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        const int m = 2 + static_cast<int>(rng() % 8);
        const int n = 2 + static_cast<int>(rng() % 8);
        std::vector<Cell> missing;
        if (rng() % 2) missing.push_back({1 + (int)(rng() % m), 1 + (int)(rng() % n)});
        const DeficientBoard b(m, n, std::move(missing));
        CHECK(board_from_json(board_to_json(b)) == b);
    }
    const ConstructOutcome outcome = construct_tiling(DeficientBoard(7, 8, {{4, 4}, {4, 5}}));
    REQUIRE(outcome.ok());
    const Tiling& t = outcome.result->tiling;
    CHECK(tiling_from_json(tiling_to_json(t)) == t);

    Tiling directed;
    directed.board = DeficientBoard(1, 2);
    directed.placements = {{PlacementKind::DominoH, {1, 1}, Direction::East}};
    CHECK(tiling_from_json(tiling_to_json(directed)) == directed);
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(board_from_json(nlohmann::json::parse("{}")), Error);
    CHECK_THROWS_AS(board_from_json(nlohmann::json::parse(R"({"rows":2,"cols":3,"missing":[[1]]})")),
                    Error);
    CHECK_THROWS_AS(tiling_from_json(nlohmann::json::parse(R"({"board":{"rows":2,"cols":3}})")),
                    Error);
    CHECK_THROWS_AS(
        tiling_from_json(nlohmann::json::parse(
            R"({"board":{"rows":2,"cols":3},"placements":[{"kind":"L","anchor":[1,1]}]})")),
        Error);
}
