#ifndef TROMINO_CHARACTERIZE_HPP
#define TROMINO_CHARACTERIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tromino/board.hpp"

namespace tromino {

using CellPair = std::pair<Cell, Cell>;  // kept sorted (first < second)

/// An edge-adjacent pair of cells whose removal from `frame` leaves an
/// untileable region. Stated w.r.t. the frame's top-left corner.
struct BadPair {
    CellPair cells;
    Rect frame;
    auto operator<=>(const BadPair&) const = default;
};

enum class VerdictReason { BadPair, Area, NoFit, Positive };

struct Verdict {
    bool tileable = false;
    VerdictReason reason = VerdictReason::NoFit;
    std::string theorem;                    // family id when reason == Positive
    std::optional<CellPair> matched_pair;   // in the original board's coordinates
    std::optional<SymmetryOp> symmetry_used;
};

/// Tileability rule for 2 x n boards (n % 3 == 1, n >= 4) with one domino
/// removed: a vertical domino must sit at a column 3k+1; a horizontal domino
/// at columns {3x+2, 3x+3} of either row.
struct TwoRowRule {
    int cols = 0;
    bool domino_tileable(const CellPair& pair) const;
    bool is_bad(const CellPair& pair) const { return !domino_tileable(pair); }
};

TwoRowRule bad_pairs_2xn(int n);

/// The 14 bad pairs of 4 x n boards, n % 3 == 2, n >= 8.
std::vector<BadPair> bad_pairs_4xn(int n);

/// The seven interior bad pairs of the 4 x 5 board (the corner-blocking
/// pairs shared with wider 4 x n boards are handled separately by decide()).
std::vector<BadPair> bad_pairs_4x5();

/// The 26 bad pairs of the 5 x 7 board: every adjacent pair in which neither
/// removed cell has both coordinates odd, plus {(3,2),(3,3)} and {(3,5),(3,6)}.
std::vector<BadPair> bad_pairs_5x7();

/// The 18 bad pairs of 5 x n boards, n % 3 == 1, n >= 10.
std::vector<BadPair> bad_pairs_5xn(int n);

/// The 16 bad pairs of m x n boards for m in {7, 10}, n % 3 == 2, n >= 8.
std::vector<BadPair> bad_pairs_7or10xn(int m, int n);

/// The 16 bad pairs of any m x n board with m, n >= 7 and 3 | (mn - 2):
/// {(2,1),(2,2)}, {(1,2),(2,2)}, {(2,3),(2,4)}, {(3,2),(4,2)} and their
/// images under the rectangle's reflections.
std::vector<BadPair> bad_pairs_general(int m, int n);

/// Every bad removal of two cells (adjacent or not) from an m x 4 board,
/// m % 3 == 2, m >= 8.
std::vector<CellPair> bad_pairs_nx4_general(int m);

/// Constant-time tileability decision. Throws Error(UnsupportedShape) for
/// deficiency patterns outside the characterized families.
Verdict decide(const DeficientBoard& b);

CellPair make_cell_pair(Cell a, Cell b);

}  // namespace tromino

#endif
