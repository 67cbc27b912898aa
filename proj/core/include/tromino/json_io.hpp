#ifndef TROMINO_JSON_IO_HPP
#define TROMINO_JSON_IO_HPP

#include <json.hpp>

#include "tromino/board.hpp"

namespace tromino {

// Board JSON: {"rows": m, "cols": n, "missing": [[r,c], ...]}
nlohmann::json board_to_json(const DeficientBoard& b);
DeficientBoard board_from_json(const nlohmann::json& j);

// Tiling JSON: {"board": ..., "placements": [{"kind": "...", "anchor": [r,c]}, ...]}
// Directed dominoes carry an extra "direction": "N"|"S"|"E"|"W".
nlohmann::json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j);

}  // namespace tromino

#endif
