#ifndef TROMINO_STRETCH_HPP
#define TROMINO_STRETCH_HPP

#include "tromino/board.hpp"

namespace tromino {

enum class TileColour { Red, Blue };

/// A domino tiling of a full rectangle with a colour per placement.
struct ColouredDominoTiling {
    Tiling tiling;
    std::vector<TileColour> colours;  // aligned with tiling.placements
};

enum class StretchAxis { Horizontal, Vertical };

/// Split each tromino into a directed domino plus a monomino: the monomino
/// occupies the cell to the right of the domino's arrowhead (facing along the
/// arrow). A missing domino-shaped deficiency becomes an undirected domino,
/// so the result tiles the full rectangle. At most one undirected domino
/// placement is permitted in the input; anything else is BAD_INPUT.
Tiling to_directed_monodic(const Tiling& t);

/// Colour the monodic form (monominoes blue, dominoes red), then stretch the
/// rectangle along the axis: each cell (i,j) becomes the cell pair
/// {(i,2j-1),(i,2j)} (horizontal) or {(2i-1,j),(2i,j)} (vertical). Monominoes
/// become single dominoes; dominoes split into two parallel dominoes.
ColouredDominoTiling stretch_map(const Tiling& t, StretchAxis axis);

/// Inverse of stretch_map on its image: cell (i,j) maps back to
/// (i, ceil(j/2)) for the horizontal axis. Returns the monodic tiling
/// (dominoes plus monominoes, undirected) of the half-size rectangle. Throws
/// Error(NotInImage) when the coloured tiling is not a stretched one.
Tiling unstretch(const ColouredDominoTiling& c, StretchAxis axis);

}  // namespace tromino

#endif
