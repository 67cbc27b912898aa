#ifndef TROMINO_COUNT_HPP
#define TROMINO_COUNT_HPP

#include <gmpxx.h>

#include "tromino/board.hpp"

namespace tromino {

using BigCount = mpz_class;

/// Exact number of right-tromino tilings of the board (missing cells are
/// treated as pre-filled). Broken-profile DP sweeping cells column-major over
/// the board, transposed first when the row count exceeds 16. Throws
/// Error(WidthCap) when both dimensions exceed 16.
BigCount count_tromino(const DeficientBoard& b);

/// Exact number of tilings of the full rectangle by trominoes plus exactly one
/// domino (either orientation, any position). Requires 3 | (mn - 2).
BigCount count_tromino_plus_one_domino(Rect r);

/// Cross-check route for the same quantity: the sum over all domino positions
/// d of count_tromino(rect minus d). Kept independent of the budgeted DP.
BigCount count_tromino_plus_one_domino_by_sum(Rect r);

/// Exact number of domino tilings (0 when the area is odd).
BigCount count_domino(Rect r);

/// Width-4 boundary interfaces. The jog geometries are frozen from a matching
/// pass against the known interface generating functions: with n = 3t flat
/// columns left of the boundary,
///   STRAIGHT     rows 1-4 end at column 3t
///   DEEP_JOG     rows 1-2 end at column 3t+1, rows 3-4 at column 3t-1
///   SHALLOW_JOG  rows 1-2 end at column 3t+2, rows 3-4 at column 3t+1
/// Counting the up-down mirror images gives the same sequences.
enum class InterfaceKind { Straight, DeepJog, ShallowJog };

BigCount count_interface(InterfaceKind kind, int t);

}  // namespace tromino

#endif
