#include <map>
#include <mutex>
#include <sstream>

#include "tromino/construct.hpp"
#include "tromino/solver.hpp"

namespace tromino {

namespace {

// Frozen searched tilings, one line per entry:
//   id rows cols [r,c ...] | KIND r c ...
// Missing cells before '|', placements after, kinds abbreviated by the
// uncovered corner (NE/NW/SE/SW) or H/V for dominoes. Generated once with
// tools/gen_base_cases and regeneration-tested against solve_exact.
const char* const kFrozenBaseCases[] = {
    "full-9x5 9 5 | NE 1 1 SW 1 2 SE 1 4 NW 2 4 NE 3 1 SW 3 2 SW 4 4 SE 5 1 SE 5 3 NW 6 1 SW 6 4 SW 7 3 NE 8 1 SW 8 2 NW 8 4",
    "dog-ear-4x5-h 4 5 1,4 1,5 | NE 1 1 SW 1 2 SE 2 4 NE 3 1 SW 3 2 NW 3 4",
    "dog-ear-4x5-v 4 5 1,5 2,5 | SE 1 1 SW 1 3 SE 2 2 NE 3 1 NE 3 3 SW 3 4",
    "dog-ear-7x5-h 7 5 1,4 1,5 | NE 1 1 SW 1 2 SW 2 4 SE 3 1 SE 3 3 NW 4 1 SW 4 4 SW 5 3 NE 6 1 SW 6 2 NW 6 4",
    "dog-ear-7x5-v 7 5 1,5 2,5 | SE 1 1 SE 1 3 NE 2 2 NE 2 4 NE 3 1 NE 4 3 SW 4 4 SE 5 1 NW 6 1 NE 6 3 SW 6 4",
    "join-4x11 4 11 2,6 3,6 | SE 1 1 NE 1 3 SW 1 4 SW 1 6 SE 1 8 SW 1 10 NE 2 2 SW 2 9 NE 3 1 NW 3 3 NE 3 5 NE 3 7 SW 3 8 NW 3 10",
    "join-5x16 5 16 2,7 2,8 | NE 1 1 SW 1 2 SE 1 4 SE 1 6 SW 1 8 NE 1 10 SW 1 11 SE 1 13 SE 1 15 NE 2 5 NW 2 13 NW 2 15 SE 3 1 SE 3 3 SW 3 7 SW 3 9 SW 3 11 NW 4 1 NW 4 3 NE 4 5 SW 4 6 NW 4 8 NW 4 10 NW 4 12 NE 4 14 SW 4 15",
    "join-7x14-a 7 14 2,7 2,8 | NE 1 1 SW 1 2 SE 1 4 SE 1 6 SW 1 8 NE 1 10 SW 1 11 SE 1 13 NE 2 5 NW 2 13 NE 3 1 SW 3 2 NE 3 4 NE 3 7 SW 3 8 NE 3 10 SW 3 11 NW 4 5 SW 4 13 SE 5 1 SE 5 3 NW 5 6 SW 5 8 SW 5 10 SW 5 12 NW 6 1 NW 6 3 NE 6 5 NW 6 7 NW 6 9 NW 6 11 NW 6 13",
    "join-7x14-b 7 14 2,9 2,10 | NE 1 1 SW 1 2 SE 1 4 SE 1 6 SE 1 8 SW 1 10 NE 1 12 SW 1 13 NE 2 5 NE 2 7 NE 3 1 SW 3 2 NE 3 4 NE 3 9 SW 3 10 NE 3 12 SW 3 13 NW 4 5 SW 4 7 SE 5 1 SE 5 3 NW 5 6 SE 5 9 SE 5 11 SE 5 13 NW 6 1 NW 6 3 NE 6 5 NW 6 7 NW 6 9 NW 6 11 NW 6 13",
    "join-13x8-a 13 8 8,1 8,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 SE 1 7 NW 2 7 NE 3 1 SW 3 2 NE 3 4 SW 3 5 SE 4 7 SE 5 1 SE 5 3 SE 5 5 NW 5 7 NW 6 1 NE 6 4 NE 6 6 NE 7 3 NW 7 7 NW 8 4 NE 8 6 NE 9 1 SW 9 2 NW 9 7 NW 10 3 SW 10 5 SE 11 1 NW 11 4 SE 11 7 NW 12 1 NE 12 3 NW 12 5 NW 12 7",
    "join-13x8-b 13 8 7,2 8,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 SE 1 7 NW 2 7 SE 3 1 NE 3 3 SW 3 4 NE 3 6 NW 4 1 NW 4 7 NE 5 3 SW 5 4 NE 5 6 SE 6 1 NW 6 7 NE 7 3 SW 7 4 NE 7 6 NE 8 1 NW 8 7 NE 9 3 SW 9 4 NE 9 6 SE 10 1 NW 10 7 SE 11 2 SE 11 4 NE 11 6 NE 12 1 NE 12 3 NE 12 5 NW 12 7",
    "join-13x8-c 13 8 8,3 8,4 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 SE 1 7 NW 2 7 NE 3 1 SW 3 2 NE 3 4 SW 3 5 SE 4 7 SE 5 1 SE 5 3 SE 5 5 NW 5 7 NE 6 2 NE 6 4 NE 6 6 NE 7 1 NW 7 7 NW 8 4 NE 8 6 NE 9 1 SW 9 2 NW 9 7 NW 10 3 SW 10 5 SE 11 1 NW 11 4 SE 11 7 NW 12 1 NE 12 3 NW 12 5 NW 12 7",
    "join-13x8-d 13 8 9,2 10,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 SE 1 7 NW 2 7 NE 3 1 SW 3 2 NE 3 4 SW 3 5 SE 4 7 SE 5 1 SE 5 3 SE 5 5 NW 5 7 NW 6 1 NE 6 4 NE 6 6 NE 7 3 NW 7 7 SE 8 1 NW 8 4 NE 8 6 NE 9 3 NW 9 7 NE 10 1 SW 10 5 NW 11 2 SW 11 4 SE 11 7 NE 12 1 NW 12 3 NW 12 5 NW 12 7",
    "join-13x11-a 13 11 8,1 8,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 NE 1 7 SW 1 8 SE 1 10 NW 2 10 NE 3 1 SW 3 2 NE 3 4 SW 3 5 NE 3 7 SW 3 8 SE 4 10 SE 5 1 NE 5 3 SW 5 4 SE 5 6 SE 5 8 NW 5 10 NW 6 1 NE 6 7 NE 6 9 NE 7 3 SW 7 4 NE 7 6 NW 7 10 NW 8 7 NE 8 9 NE 9 1 SW 9 2 NE 9 4 SW 9 5 NW 9 10 NE 10 7 SW 10 8 SE 11 1 SE 11 3 SE 11 5 SE 11 10 NW 12 1 NW 12 3 NW 12 5 NE 12 7 SW 12 8 NW 12 10",
    "join-13x11-b 13 11 7,2 8,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 NE 1 7 SW 1 8 SE 1 10 NW 2 10 SE 3 1 NE 3 3 SW 3 4 NE 3 6 SW 3 7 NE 3 9 NW 4 1 NW 4 10 NE 5 3 SW 5 4 NE 5 6 SW 5 7 NE 5 9 SE 6 1 NW 6 10 NE 7 3 SW 7 4 NE 7 6 SW 7 7 NE 7 9 NE 8 1 NW 8 10 NE 9 3 SW 9 4 NE 9 6 SW 9 7 NE 9 9 SE 10 1 NW 10 10 SE 11 2 SE 11 4 SE 11 6 SE 11 8 NE 12 1 NE 12 3 NE 12 5 NE 12 7 NE 12 9 SW 12 10",
    "join-13x11-c 13 11 8,3 8,4 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 NE 1 7 SW 1 8 SE 1 10 NW 2 10 NE 3 1 SW 3 2 NE 3 4 SW 3 5 NE 3 7 SW 3 8 SE 4 10 NE 5 1 SW 5 2 SW 5 4 SE 5 6 SE 5 8 NW 5 10 NW 6 3 NE 6 7 NE 6 9 SE 7 1 SE 7 5 NW 7 10 NE 8 2 NE 8 6 SW 8 7 NE 8 9 NE 9 1 NW 9 3 NE 9 5 NW 9 10 NE 10 7 SW 10 8 SE 11 1 SE 11 3 SE 11 5 SE 11 10 NW 12 1 NW 12 3 NW 12 5 NE 12 7 SW 12 8 NW 12 10",
    "join-13x11-d 13 11 9,2 10,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 NE 1 7 SW 1 8 SE 1 10 NW 2 10 NE 3 1 SW 3 2 NE 3 4 SW 3 5 NE 3 7 SW 3 8 SE 4 10 SE 5 1 NE 5 3 SW 5 4 SE 5 6 SE 5 8 NW 5 10 NW 6 1 NE 6 7 NE 6 9 NE 7 3 SW 7 4 NE 7 6 NW 7 10 SE 8 1 NW 8 7 NE 8 9 NE 9 3 SW 9 4 NE 9 6 NW 9 10 NE 10 1 SW 10 8 SW 11 3 SW 11 5 SW 11 7 SE 11 10 NE 12 1 SW 12 2 NW 12 4 NW 12 6 NW 12 8 NW 12 10",
    "join-16x8-a 16 8 7,2 8,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 SE 1 7 NW 2 7 SE 3 1 NE 3 3 SW 3 4 NE 3 6 NW 4 1 NW 4 7 NE 5 3 SW 5 4 NE 5 6 SE 6 1 NW 6 7 NE 7 3 SW 7 4 NE 7 6 NE 8 1 NW 8 7 NE 9 3 SW 9 4 NE 9 6 SE 10 1 NW 10 7 NE 11 2 SW 11 3 SE 11 5 NE 12 1 NE 12 6 SW 12 7 SE 13 3 NE 13 5 SE 14 1 NE 14 4 SE 14 7 NW 15 1 NE 15 3 NW 15 5 NW 15 7",
    "join-16x8-b 16 8 9,2 10,2 | NE 1 1 SW 1 2 NE 1 4 SW 1 5 SE 1 7 NW 2 7 NE 3 1 SW 3 2 NE 3 4 SW 3 5 SE 4 7 SE 5 1 SE 5 3 SE 5 5 NW 5 7 NW 6 1 NE 6 4 NE 6 6 NE 7 3 NW 7 7 SE 8 1 NW 8 4 NE 8 6 NE 9 3 NW 9 7 NE 10 1 NW 10 4 NE 10 6 NE 11 3 NW 11 7 SE 12 1 NW 12 4 NE 12 6 NW 13 1 NE 13 3 NW 13 7 SE 14 5 NE 15 1 SW 15 2 NE 15 4 NE 15 6 SW 15 7",
    "sample-4x8 4 8 1,1 1,2 | NE 1 3 SW 1 4 NE 1 6 SW 1 7 SE 2 1 NW 3 1 NE 3 3 SW 3 4 NE 3 6 SW 3 7",
    "sample-5x10 5 10 1,1 2,1 | NE 1 2 SW 1 3 NE 1 5 SW 1 6 NE 1 8 SW 1 9 SE 3 1 SE 3 3 SE 3 5 SE 3 7 SE 3 9 NW 4 1 NW 4 3 NW 4 5 NW 4 7 NW 4 9",
    "sample-5x13 5 13 1,1 2,1 | NE 1 2 SW 1 3 NE 1 5 SW 1 6 SE 1 8 SE 1 10 SW 1 12 NE 2 9 SE 2 11 SE 3 1 SE 3 3 SE 3 5 SE 3 7 SE 3 12 NW 4 1 NW 4 3 NW 4 5 NW 4 7 NE 4 9 SW 4 10 NW 4 12",
    "sample-7x8 7 8 1,1 1,2 | NE 1 3 SW 1 4 NE 1 6 SW 1 7 SE 2 1 NE 3 2 SW 3 3 SE 3 5 SE 3 7 NE 4 1 NW 4 5 NW 4 7 SW 5 3 NE 6 1 SW 6 2 NW 6 4 NE 6 6 SW 6 7",
    "sample-7x11 7 11 1,1 1,2 | NE 1 3 SW 1 4 NE 1 6 SW 1 7 NE 1 9 SW 1 10 SE 2 1 NE 3 2 SW 3 3 NE 3 5 SW 3 6 SE 3 8 SE 3 10 NE 4 1 NW 4 8 NW 4 10 NW 5 2 SW 5 4 SW 5 6 NE 6 1 NW 6 3 NW 6 5 NW 6 7 NE 6 9 SW 6 10",
    "sample-10x8 10 8 1,1 1,2 | NE 1 3 SW 1 4 NE 1 6 SW 1 7 SE 2 1 NE 3 2 SW 3 3 SE 3 5 SE 3 7 NE 4 1 NW 4 5 NW 4 7 NW 5 2 NE 5 4 NE 6 1 NE 6 6 SW 6 7 SE 7 3 NE 7 5 SE 8 1 NE 8 4 SE 8 7 NW 9 1 NE 9 3 NW 9 5 NW 9 7",
    "sample-8x4 8 4 1,1 1,2 | SE 1 3 SE 2 1 NW 2 3 NE 3 2 NE 4 1 NW 4 3 SE 6 1 SE 6 3 NW 7 1 NW 7 3",
    "join-11x4-a 11 4 4,1 5,2 | SE 1 1 SW 1 3 SW 2 2 SW 3 1 NW 3 3 NE 5 1 SE 5 3 NW 6 3 SE 7 1 NW 8 1 SW 8 3 NW 9 2 NE 10 1 NW 10 3",
    "join-11x4-b 11 4 5,2 6,3 | SE 1 1 SW 1 3 SE 2 2 NE 3 1 SE 3 3 NW 4 3 NE 5 1 NW 6 3 SE 7 1 NW 8 1 SW 8 3 NW 9 2 NE 10 1 NW 10 3",
    nullptr,
};

PlacementKind kind_from_tag(const std::string& tag) {
    if (tag == "NE") return PlacementKind::TrominoNE;
    if (tag == "NW") return PlacementKind::TrominoNW;
    if (tag == "SE") return PlacementKind::TrominoSE;
    if (tag == "SW") return PlacementKind::TrominoSW;
    if (tag == "H") return PlacementKind::DominoH;
    if (tag == "V") return PlacementKind::DominoV;
    if (tag == "M") return PlacementKind::Monomino;
    throw Error(Errc::BadInput, "bad placement tag in frozen table: " + tag);
}

BaseCaseEntry parse_entry(const std::string& line) {
    std::istringstream in(line);
    BaseCaseEntry entry;
    int rows, cols;
    in >> entry.id >> rows >> cols;
    std::vector<Cell> missing;
    std::string tok;
    while (in >> tok && tok != "|") {
        const auto comma = tok.find(',');
        missing.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
    }
    entry.board = DeficientBoard(rows, cols, std::move(missing));
    entry.tiling.board = entry.board;
    std::string tag;
    int r, c;
    while (in >> tag >> r >> c)
        entry.tiling.placements.push_back({kind_from_tag(tag), {r, c}, std::nullopt});
    return entry;
}

struct BoardKey {
    int rows, cols;
    std::vector<Cell> missing;
    auto operator<=>(const BoardKey&) const = default;
};

BoardKey key_of(const DeficientBoard& b) {
    return {b.rect().rows, b.rect().cols, b.missing()};
}

}  // namespace

const std::vector<BaseCaseEntry>& base_case_table() {
    static const std::vector<BaseCaseEntry> table = [] {
        std::vector<BaseCaseEntry> out;
        for (const char* const* line = kFrozenBaseCases; *line != nullptr; ++line)
            out.push_back(parse_entry(*line));
        return out;
    }();
    return table;
}

Tiling base_case_tiling(const DeficientBoard& b) {
    static std::mutex mutex;
    static std::map<BoardKey, Tiling> cache;
    const BoardKey key = key_of(b);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Tiling result;
    bool found = false;
    for (const BaseCaseEntry& entry : base_case_table()) {
        if (key_of(entry.board) == key) {
            result = entry.tiling;
            found = true;
            break;
        }
    }
    if (!found) {
        auto solved = solve_exact(b);
        if (!solved)
            throw Error(Errc::BadInput, "base-case board has no tiling");
        result = std::move(*solved);
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, result);
    return result;
}

}  // namespace tromino
