#ifndef TROMINO_SOLVER_HPP
#define TROMINO_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tromino/board.hpp"

namespace tromino {

struct SolveOptions {
    int cell_cap = 176;    // maximum board area (m*n) accepted
    int domino_budget = 0; // 0 = trominoes only, 1 = trominoes plus one domino
};

/// Depth-first exact-cover search. Branches on the lexicographically first
/// uncovered cell; candidate placements are tried in fixed kind order
/// (TROMINO_NE, NW, SE, SW, then DOMINO_H, DOMINO_V when budgeted) and by
/// anchor within a kind, so results are deterministic. Failed sub-states are
/// memoized. This is the verification oracle for every other path in the
/// library; it shares no code with the counting DP or the constructions.
std::optional<Tiling> solve_exact(const DeficientBoard& b, const SolveOptions& opts = {});

/// All tilings (up to `limit`) in the solver's deterministic DFS order.
std::vector<Tiling> enumerate_tilings(const DeficientBoard& b,
                                      std::uint64_t limit = UINT64_MAX,
                                      const SolveOptions& opts = {});

}  // namespace tromino

#endif
