#include <doctest.h>

#include <array>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "tromino/construct.hpp"
#include "tromino/solver.hpp"

using namespace tromino;

namespace {

// The steps of a decomposition must partition the rectangle exactly, with
// the deficiency inside exactly one region.
void audit_steps(const DeficientBoard& board, const std::vector<DecompositionStep>& steps) {
    const Rect r = board.rect();
    std::vector<int> cover(static_cast<size_t>(r.area()), 0);
    for (const DecompositionStep& s : steps) {
        for (int dr = 0; dr < s.size.rows; ++dr) {
            for (int dc = 0; dc < s.size.cols; ++dc) {
                const int row = s.origin.row + dr, col = s.origin.col + dc;
                REQUIRE(r.contains(Cell{row, col}));
                cover[static_cast<size_t>(row - 1) * r.cols + (col - 1)] += 1;
            }
        }
    }
    for (int v : cover) CHECK(v == 1);
    int regions_with_deficiency = 0;
    for (const DecompositionStep& s : steps) {
        bool holds = false;
        for (const Cell& m : board.missing()) {
            if (m.row >= s.origin.row && m.row < s.origin.row + s.size.rows &&
                m.col >= s.origin.col && m.col < s.origin.col + s.size.cols)
                holds = true;
        }
        if (holds) ++regions_with_deficiency;
    }
    if (!board.missing().empty() && board.is_domino_deficient())
        CHECK(regions_with_deficiency == 1);
}

int tromino_count(const Tiling& t) {
    int count = 0;
    for (const Placement& p : t.placements)
        if (is_tromino(p.kind)) ++count;
    return count;
}

}  // namespace

TEST_CASE("tile_full_rect") {
    const ConstructResult small = tile_full_rect(Rect{3, 2});
    CHECK(small.tiling.placements.size() == 2);
    CHECK(validate_tiling(small.tiling).ok);

    const ConstructResult nine_five = tile_full_rect(Rect{9, 5});
    CHECK(tromino_count(nine_five.tiling) == 15);
    CHECK(validate_tiling(nine_five.tiling).ok);

    CHECK_THROWS_AS(tile_full_rect(Rect{3, 5}), Error);
    CHECK_THROWS_AS(tile_full_rect(Rect{1, 3}), Error);
    CHECK_THROWS_AS(tile_full_rect(Rect{2, 2}), Error);

    for (const Rect r : {Rect{6, 7}, Rect{9, 9}, Rect{15, 11}, Rect{12, 10}, Rect{5, 9},
                         Rect{2, 9}, Rect{21, 5}}) {
        const ConstructResult res = tile_full_rect(r);
        CHECK(validate_tiling(res.tiling).ok);
        audit_steps(res.tiling.board, res.steps);
    }
}

TEST_CASE("tile_dog_eared") {
    const ConstructResult base = tile_dog_eared(4, 5, Corner::TopRight,
                                                DominoOrientation::Horizontal);
    CHECK(tromino_count(base.tiling) == 6);
    CHECK(validate_tiling(base.tiling).ok);

    for (const auto [m, n] : {std::pair(7, 11), std::pair(10, 11), std::pair(4, 8),
                              std::pair(13, 14), std::pair(7, 5), std::pair(16, 17)}) {
        for (Corner corner : {Corner::TopLeft, Corner::TopRight, Corner::BottomLeft,
                              Corner::BottomRight}) {
            for (DominoOrientation o :
                 {DominoOrientation::Horizontal, DominoOrientation::Vertical}) {
                const ConstructResult res = tile_dog_eared(m, n, corner, o);
                CHECK(validate_tiling(res.tiling).ok);
                CHECK(res.tiling.board.rect() == Rect{m, n});
                audit_steps(res.tiling.board, res.steps);
            }
        }
    }
    CHECK_THROWS_AS(tile_dog_eared(3, 4, Corner::TopRight, DominoOrientation::Horizontal),
                    Error);
    CHECK_THROWS_AS(tile_dog_eared(4, 4, Corner::TopRight, DominoOrientation::Horizontal),
                    Error);
}

TEST_CASE("construct_tiling on the documented boards") {
    // {(2,1),(2,2)} is a bad pair on any board with both sides >= 7; the
    // searched 13x11 base tilings serve the joined positions such as
    // {(8,1),(8,2)}
    CHECK_FALSE(construct_tiling(DeficientBoard(13, 11, {{2, 1}, {2, 2}})).ok());
    const ConstructOutcome join13 = construct_tiling(DeficientBoard(13, 11, {{8, 1}, {8, 2}}));
    REQUIRE(join13.ok());
    CHECK(validate_tiling(join13.result->tiling).ok);

    const ConstructOutcome join4 = construct_tiling(DeficientBoard(4, 14, {{2, 6}, {3, 6}}));
    REQUIRE(join4.ok());
    CHECK(validate_tiling(join4.result->tiling).ok);
    const bool used_wide_window = std::any_of(
        join4.result->steps.begin(), join4.result->steps.end(), [](const DecompositionStep& s) {
            return s.rule == DecompRule::JoinRepair && s.size == Rect{4, 11};
        });
    CHECK(used_wide_window);

    const ConstructOutcome big =
        construct_tiling(DeficientBoard(100, 104, {{50, 50}, {50, 51}}));
    REQUIRE(big.ok());
    CHECK(tromino_count(big.result->tiling) == (100 * 104 - 2) / 3);
    CHECK(validate_tiling(big.result->tiling).ok);
    audit_steps(big.result->tiling.board, big.result->steps);

    const ConstructOutcome bad = construct_tiling(DeficientBoard(7, 8, {{2, 1}, {2, 2}}));
    CHECK_FALSE(bad.ok());
    CHECK(bad.verdict.reason == VerdictReason::BadPair);
    REQUIRE(bad.verdict.matched_pair.has_value());
}

TEST_CASE("construct_tiling covers every family exhaustively at small scale") {
    for (const Rect r : {Rect{2, 10}, Rect{4, 8}, Rect{4, 11}, Rect{5, 10}, Rect{7, 8},
                         Rect{10, 8}, Rect{8, 5}, Rect{13, 8}}) {
        for (int row = 1; row <= r.rows; ++row) {
            for (int col = 1; col <= r.cols; ++col) {
                for (const Cell other : {Cell{row, col + 1}, Cell{row + 1, col}}) {
                    if (!r.contains(other)) continue;
                    const DeficientBoard b(r.rows, r.cols, {{row, col}, other});
                    const ConstructOutcome outcome = construct_tiling(b);
                    CHECK(outcome.ok() == decide(b).tileable);
                    if (outcome.ok()) {
                        CHECK(validate_tiling(outcome.result->tiling).ok);
                        audit_steps(b, outcome.result->steps);
                    }
                }
            }
        }
    }
}

TEST_CASE("construct_tiling degenerate and deficient paths") {
    const ConstructOutcome empty = construct_tiling(DeficientBoard(1, 2, {{1, 1}, {1, 2}}));
    REQUIRE(empty.ok());
    CHECK(empty.result->tiling.placements.empty());

    const ConstructOutcome full = construct_tiling(DeficientBoard(6, 8));
    REQUIRE(full.ok());
    CHECK(validate_tiling(full.result->tiling).ok);

    const ConstructOutcome tromino_only = construct_tiling(DeficientBoard(2, 2, {{2, 1}}));
    REQUIRE(tromino_only.ok());
    CHECK(tromino_only.result->tiling.placements.size() == 1);

    for (int row = 1; row <= 4; ++row) {
        for (int col = 1; col <= 4; ++col) {
            const ConstructOutcome one = construct_tiling(DeficientBoard(4, 4, {{row, col}}));
            REQUIRE(one.ok());
            CHECK(validate_tiling(one.result->tiling).ok);
        }
    }

    // a large one-cell-deficient board exercises the slab-peeling path
    const ConstructOutcome large = construct_tiling(DeficientBoard(22, 22, {{11, 7}}));
    REQUIRE(large.ok());
    CHECK(validate_tiling(large.result->tiling).ok);
    audit_steps(large.result->tiling.board, large.result->steps);
}

TEST_CASE("nx4 two-deficiency construction") {
    const ConstructOutcome split = tile_nx4_2deficient(DeficientBoard(11, 4, {{1, 1}, {9, 4}}));
    REQUIRE(split.ok());
    CHECK(validate_tiling(split.result->tiling).ok);
    const long windows = std::count_if(
        split.result->steps.begin(), split.result->steps.end(),
        [](const DecompositionStep& s) { return s.note == "isolated-cell-window"; });
    CHECK(windows == 2);

    CHECK_FALSE(tile_nx4_2deficient(DeficientBoard(8, 4, {{1, 1}, {2, 2}})).ok());

    // a bad 8x4 position shifted into the middle of 11x4 needs the join window
    const ConstructOutcome join = tile_nx4_2deficient(DeficientBoard(11, 4, {{4, 1}, {5, 2}}));
    REQUIRE(join.ok());
    CHECK(validate_tiling(join.result->tiling).ok);

    // exhaustive agreement with decide over every pair of cells
    for (const int m : {8, 11}) {
        std::vector<Cell> cells;
        for (int r = 1; r <= m; ++r)
            for (int c = 1; c <= 4; ++c) cells.push_back({r, c});
        for (size_t i = 0; i < cells.size(); ++i) {
            for (size_t j = i + 1; j < cells.size(); ++j) {
                const DeficientBoard b(m, 4, {cells[i], cells[j]});
                const ConstructOutcome outcome = construct_tiling(b);
                CHECK(outcome.ok() == decide(b).tileable);
                if (outcome.ok()) CHECK(validate_tiling(outcome.result->tiling).ok);
            }
        }
    }
}

TEST_CASE("construction is deterministic") {
    const DeficientBoard b(31, 35, {{17, 12}, {17, 13}});
    const ConstructOutcome a = construct_tiling(b);
    const ConstructOutcome c = construct_tiling(b);
    REQUIRE(a.ok());
    CHECK(a.result->tiling == c.result->tiling);
    CHECK(a.result->steps == c.result->steps);
}

TEST_CASE("base case table") {
    const auto& table = base_case_table();
    CHECK(table.size() >= 16);
    std::set<std::pair<int, int>> shapes;
    for (const BaseCaseEntry& e : table) {
        shapes.insert({e.board.rect().rows, e.board.rect().cols});
        CHECK(validate_tiling(e.tiling).ok);
        const auto regenerated = solve_exact(e.board);
        REQUIRE(regenerated.has_value());
        CHECK(regenerated->placements == e.tiling.placements);
    }
    CHECK(shapes.size() >= 16);
    // the searched 16x8 join tiling covers both symmetric join positions
    CHECK(shapes.count({16, 8}) == 1);
    CHECK(base_case_tiling(DeficientBoard(9, 5)).placements.size() == 15);
}

TEST_CASE("construction is safe to run concurrently") {
    // all operations are pure values in, values out; the base-case cache is
    // the only shared state and is internally synchronized
    std::vector<std::thread> workers;
    std::array<std::atomic<bool>, 8> ok{};
    for (int w = 0; w < 8; ++w) {
        ok[w] = true;
        workers.emplace_back([w, &ok] {
            std::mt19937 rng(1000u + w);
            for (int i = 0; i < 50; ++i) {
                const int m = 4 + 3 * static_cast<int>(rng() % 10);
                const int n = 5 + 3 * static_cast<int>(rng() % 10);
                const int r = 1 + static_cast<int>(rng() % m);
                const int c = 1 + static_cast<int>(rng() % (n - 1));
                const DeficientBoard b(m, n, {{r, c}, {r, c + 1}});
                const ConstructOutcome outcome = construct_tiling(b);
                if (outcome.ok() != decide(b).tileable) ok[w] = false;
                if (outcome.ok() && !validate_tiling(outcome.result->tiling).ok) ok[w] = false;
            }
        });
    }
    for (auto& t : workers) t.join();
    for (int w = 0; w < 8; ++w) CHECK(ok[w].load());
}
