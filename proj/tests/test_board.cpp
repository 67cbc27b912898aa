#include <doctest.h>

#include <random>

#include "tromino/board.hpp"
#include "tromino/construct.hpp"

using namespace tromino;

namespace {

Tiling two_tromino_2x3() {
    Tiling t;
    t.board = DeficientBoard(2, 3);
    t.placements = {{PlacementKind::TrominoSE, {1, 1}, std::nullopt},
                    {PlacementKind::TrominoNW, {1, 2}, std::nullopt}};
    return t;
}

DeficientBoard random_board(std::mt19937& rng) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Cell> missing;
    const int k = static_cast<int>(rng() % 3);
    while (static_cast<int>(missing.size()) < k) {
        Cell c{1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)};
        if (std::find(missing.begin(), missing.end(), c) == missing.end()) missing.push_back(c);
    }
    return DeficientBoard(m, n, std::move(missing));
}

}  // namespace

TEST_CASE("covered cells per kind") {
    CHECK(covered_cells({PlacementKind::Monomino, {1, 1}, std::nullopt}) ==
          std::vector<Cell>{{1, 1}});
    CHECK(covered_cells({PlacementKind::DominoH, {2, 3}, std::nullopt}) ==
          std::vector<Cell>{{2, 3}, {2, 4}});
    CHECK(covered_cells({PlacementKind::TrominoSE, {1, 1}, std::nullopt}) ==
          std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    for (PlacementKind k :
         {PlacementKind::TrominoNE, PlacementKind::TrominoNW, PlacementKind::TrominoSE,
          PlacementKind::TrominoSW, PlacementKind::DominoH, PlacementKind::DominoV,
          PlacementKind::Monomino}) {
        const Placement p{k, {3, 4}, std::nullopt};
        CHECK(static_cast<int>(covered_cells(p).size()) == placement_size(k));
        CHECK(placement_from_cells(covered_cells(p)) == Placement{k, {3, 4}, std::nullopt});
    }
}

TEST_CASE("validate_tiling verdicts") {
    Tiling t = two_tromino_2x3();
    CHECK(validate_tiling(t).ok);

    Tiling missing_piece = t;
    missing_piece.placements.pop_back();
    const auto uncovered = validate_tiling(missing_piece);
    CHECK_FALSE(uncovered.ok);
    CHECK(uncovered.violation == ViolationKind::Uncovered);

    Tiling overlapping = t;
    overlapping.placements = {{PlacementKind::TrominoSE, {1, 1}, std::nullopt},
                              {PlacementKind::TrominoSE, {1, 1}, std::nullopt}};
    const auto overlap = validate_tiling(overlapping);
    CHECK_FALSE(overlap.ok);
    CHECK(overlap.violation == ViolationKind::Overlap);

    Tiling outside = t;
    outside.placements.push_back({PlacementKind::DominoV, {3, 1}, std::nullopt});
    CHECK(validate_tiling(outside).violation == ViolationKind::OutOfBounds);

    Tiling covers_missing;
    covers_missing.board = DeficientBoard(2, 3, {{1, 1}});
    covers_missing.placements = {{PlacementKind::TrominoSE, {1, 1}, std::nullopt}};
    CHECK(validate_tiling(covers_missing).violation == ViolationKind::CoversMissing);
}

TEST_CASE("partition size of accepted tilings") {
    std::mt19937 rng(7);
    int accepted = 0;
    for (int i = 0; i < 200; ++i) {
        const DeficientBoard b = random_board(rng);
        const auto outcome = [&]() -> std::optional<Tiling> {
            try {
                auto res = construct_tiling(b);
                if (res.ok()) return res.result->tiling;
            } catch (const Error&) {
            }
            return std::nullopt;
        }();
        if (!outcome) continue;
        ++accepted;
        REQUIRE(validate_tiling(*outcome).ok);
        long long covered = 0;
        for (const Placement& p : outcome->placements) covered += placement_size(p.kind);
        CHECK(covered == b.tile_area());
    }
    CHECK(accepted > 10);
}

TEST_CASE("symmetry examples") {
    const DeficientBoard b(7, 8, {{2, 1}, {2, 2}});
    CHECK(apply_symmetry(b, SymmetryOp::FlipH).missing() ==
          std::vector<Cell>{{2, 7}, {2, 8}});
    CHECK(apply_symmetry(b, SymmetryOp::Identity) == b);
    const DeficientBoard c(4, 8, {{2, 3}, {3, 3}});
    const DeficientBoard tc = apply_symmetry(c, SymmetryOp::Transpose);
    CHECK(tc.rect() == Rect{8, 4});
    CHECK(tc.missing() == std::vector<Cell>{{3, 2}, {3, 3}});
}

TEST_CASE("symmetry round trips and composition") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        const DeficientBoard b = random_board(rng);
        for (SymmetryOp s : {SymmetryOp::FlipH, SymmetryOp::FlipV, SymmetryOp::Rot180,
                             SymmetryOp::Transpose, SymmetryOp::Identity})
            CHECK(apply_symmetry(apply_symmetry(b, s), s) == b);
        CHECK(apply_symmetry(apply_symmetry(b, SymmetryOp::FlipH), SymmetryOp::FlipV) ==
              apply_symmetry(b, SymmetryOp::Rot180));
    }
}

TEST_CASE("validation is symmetry-equivariant") {
    Tiling t = two_tromino_2x3();
    for (SymmetryOp s : {SymmetryOp::FlipH, SymmetryOp::FlipV, SymmetryOp::Rot180,
                         SymmetryOp::Transpose})
        CHECK(validate_tiling(apply_symmetry(t, s)).ok == validate_tiling(t).ok);
    t.placements.pop_back();
    for (SymmetryOp s : {SymmetryOp::FlipH, SymmetryOp::Transpose})
        CHECK(validate_tiling(apply_symmetry(t, s)).ok == validate_tiling(t).ok);
}

TEST_CASE("hquad and vquad shifts") {
    const DeficientBoard b(4, 8, {{2, 3}, {2, 4}});
    CHECK(hquad_shift(b, 3, HSide::Right).missing() == std::vector<Cell>{{2, 6}, {2, 7}});
    CHECK(hquad_shift(b, 0, HSide::Left) == b);
    const DeficientBoard v(4, 8, {{2, 3}, {3, 3}});
    CHECK(hquad_shift(v, 3, HSide::Right).missing() == std::vector<Cell>{{2, 6}, {3, 6}});
    const DeficientBoard tall(10, 8, {{2, 3}, {2, 4}});
    CHECK(vquad_shift(tall, 6, VSide::Bottom).missing() ==
          std::vector<Cell>{{8, 3}, {8, 4}});
    CHECK_THROWS_AS(hquad_shift(b, 4, HSide::Left), Error);  // shift through the deficiency
}

TEST_CASE("shift round trip") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        const DeficientBoard b = random_board(rng);
        for (int k = 0; k < b.rect().cols; ++k) {
            try {
                const DeficientBoard shifted = hquad_shift(b, k, HSide::Left);
                CHECK(hquad_shift(shifted, k, HSide::Right) == b);
            } catch (const Error& e) {
                CHECK(e.code() == Errc::ShiftThroughDeficiency);
            }
        }
    }
}

TEST_CASE("board construction rejects bad inputs") {
    CHECK_THROWS_AS(DeficientBoard(0, 3), Error);
    CHECK_THROWS_AS(DeficientBoard(2, 3, {{3, 1}}), Error);
    CHECK_THROWS_AS(DeficientBoard(2, 3, {{1, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(DeficientBoard(3, 3, {{1, 1}, {1, 2}, {1, 3}}), Error);
    CHECK(DeficientBoard(2, 3, {{1, 2}, {1, 1}}).missing() ==
          std::vector<Cell>{{1, 1}, {1, 2}});  // sorted
    CHECK(DeficientBoard(4, 4, {{1, 1}, {2, 1}}).is_domino_deficient());
    CHECK_FALSE(DeficientBoard(4, 4, {{1, 1}, {2, 2}}).is_domino_deficient());
}
