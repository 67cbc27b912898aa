// Regenerates the frozen base-case table: prints one line per catalog entry
// in the format parsed by base_cases.cpp. Run once and paste the output.
#include <iostream>

#include "tromino/board.hpp"
#include "tromino/solver.hpp"

using namespace tromino;

namespace {

const char* tag(PlacementKind k) {
    switch (k) {
        case PlacementKind::TrominoNE: return "NE";
        case PlacementKind::TrominoNW: return "NW";
        case PlacementKind::TrominoSE: return "SE";
        case PlacementKind::TrominoSW: return "SW";
        case PlacementKind::DominoH: return "H";
        case PlacementKind::DominoV: return "V";
        case PlacementKind::Monomino: return "M";
    }
    return "?";
}

void emit(const std::string& id, int rows, int cols, std::vector<Cell> missing) {
    const DeficientBoard board(rows, cols, std::move(missing));
    const auto tiling = solve_exact(board);
    if (!tiling) {
        std::cerr << "no tiling for " << id << "\n";
        std::exit(1);
    }
    std::cout << "    \"" << id << ' ' << rows << ' ' << cols;
    for (const Cell& c : board.missing()) std::cout << ' ' << c.row << ',' << c.col;
    std::cout << " |";
    for (const Placement& p : tiling->placements)
        std::cout << ' ' << tag(p.kind) << ' ' << p.anchor.row << ' ' << p.anchor.col;
    std::cout << "\",\n";
}

}  // namespace

int main() {
    emit("full-9x5", 9, 5, {});
    emit("dog-ear-4x5-h", 4, 5, {{1, 4}, {1, 5}});
    emit("dog-ear-4x5-v", 4, 5, {{1, 5}, {2, 5}});
    emit("dog-ear-7x5-h", 7, 5, {{1, 4}, {1, 5}});
    emit("dog-ear-7x5-v", 7, 5, {{1, 5}, {2, 5}});
    emit("join-4x11", 4, 11, {{2, 6}, {3, 6}});
    emit("join-5x16", 5, 16, {{2, 7}, {2, 8}});
    emit("join-7x14-a", 7, 14, {{2, 7}, {2, 8}});
    emit("join-7x14-b", 7, 14, {{2, 9}, {2, 10}});
    emit("join-13x8-a", 13, 8, {{8, 1}, {8, 2}});
    emit("join-13x8-b", 13, 8, {{7, 2}, {8, 2}});
    emit("join-13x8-c", 13, 8, {{8, 3}, {8, 4}});
    emit("join-13x8-d", 13, 8, {{9, 2}, {10, 2}});
    emit("join-13x11-a", 13, 11, {{8, 1}, {8, 2}});
    emit("join-13x11-b", 13, 11, {{7, 2}, {8, 2}});
    emit("join-13x11-c", 13, 11, {{8, 3}, {8, 4}});
    emit("join-13x11-d", 13, 11, {{9, 2}, {10, 2}});
    emit("join-16x8-a", 16, 8, {{7, 2}, {8, 2}});
    emit("join-16x8-b", 16, 8, {{9, 2}, {10, 2}});
    emit("sample-4x8", 4, 8, {{1, 1}, {1, 2}});
    emit("sample-5x10", 5, 10, {{1, 1}, {2, 1}});
    emit("sample-5x13", 5, 13, {{1, 1}, {2, 1}});
    emit("sample-7x8", 7, 8, {{1, 1}, {1, 2}});
    emit("sample-7x11", 7, 11, {{1, 1}, {1, 2}});
    emit("sample-10x8", 10, 8, {{1, 1}, {1, 2}});
    emit("sample-8x4", 8, 4, {{1, 1}, {1, 2}});
    emit("join-11x4-a", 11, 4, {{4, 1}, {5, 2}});
    emit("join-11x4-b", 11, 4, {{5, 2}, {6, 3}});
    return 0;
}
