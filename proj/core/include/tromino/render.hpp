#ifndef TROMINO_RENDER_HPP
#define TROMINO_RENDER_HPP

#include <string>

#include "tromino/board.hpp"

namespace tromino {

/// One letter per placement cycling a-z, '.' for missing cells, one row per
/// line. Cells covered by no placement render as '?'.
std::string ascii_grid(const Tiling& t);

/// Unit squares of 24 units with a 1-unit stroke, one fill per placement,
/// and a dot marker on each missing cell.
std::string render_svg(const Tiling& t);

}  // namespace tromino

#endif
