#ifndef TROMINO_CONSTRUCT_HPP
#define TROMINO_CONSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "tromino/board.hpp"
#include "tromino/characterize.hpp"

namespace tromino {

enum class DecompRule {
    BlockGrid,          // region filled with 2x3 / 3x2 blocks
    ThreeColumnStrip,   // 3-wide (or 3-tall) strip split off an odd side
    SpecialNineByFive,  // the searched 9x5 (or 5x9) tiling
    BaseCase,           // searched base-case tiling containing the deficiency
    ShiftRepair,        // base window relocated by whole slabs
    JoinRepair,         // enlarged base window absorbing a removed slab
};

struct DecompositionStep {
    Cell origin;  // top-left cell of the region, board coordinates
    Rect size;
    DecompRule rule{};
    std::string note;

    auto operator<=>(const DecompositionStep&) const = default;
};

struct ConstructResult {
    Tiling tiling;
    std::vector<DecompositionStep> steps;
};

struct ConstructOutcome {
    std::optional<ConstructResult> result;
    Verdict verdict;
    bool ok() const { return result.has_value(); }
};

/// Tile a full rectangle (3 | mn, both sides >= 2, not 3 x odd) from 2x3
/// blocks plus the special 9x5 tiling. Throws Error(UntileableRect).
ConstructResult tile_full_rect(Rect r);

enum class Corner { TopLeft, TopRight, BottomLeft, BottomRight };
enum class DominoOrientation { Horizontal, Vertical };

/// Tile an m x n rectangle with a domino removed from the given corner
/// (m, n >= 4, 3 | (mn - 2)) by stripping full blocks down to the searched
/// 4x5 / 7x5 corner base cases. Throws Error(BadShape).
ConstructResult tile_dog_eared(int rows, int cols, Corner corner, DominoOrientation orientation);

/// Produce a tiling for any board decide() declares tileable; otherwise
/// returns the negative verdict. Runtime linear in the board area.
ConstructOutcome construct_tiling(const DeficientBoard& b);

/// The two-cell-deficiency construction for m x 4 boards (m % 3 == 2, m >= 8):
/// either two 4x4 windows isolating one missing cell each, or a reduction to
/// the searched 8x4 table with an 11x4 join when the 8x4 position is bad.
ConstructOutcome tile_nx4_2deficient(const DeficientBoard& b);

struct BaseCaseEntry {
    std::string id;
    DeficientBoard board;
    Tiling tiling;
};

/// The frozen catalog of searched base-case tilings, committed as data and
/// regeneration-tested against solve_exact.
const std::vector<BaseCaseEntry>& base_case_table();

/// Deterministic base tiling for a small board: the frozen entry when one
/// exists, otherwise a memoized solve_exact run.
Tiling base_case_tiling(const DeficientBoard& b);

}  // namespace tromino

#endif
