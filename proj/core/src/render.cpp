#include "tromino/render.hpp"

#include <array>
#include <sstream>

namespace tromino {

std::string ascii_grid(const Tiling& t) {
    const Rect r = t.board.rect();
    std::vector<std::string> grid(static_cast<size_t>(r.rows), std::string(r.cols, '?'));
    for (const Cell& c : t.board.missing()) grid[c.row - 1][c.col - 1] = '.';
    int index = 0;
    for (const Placement& p : t.placements) {
        const char letter = static_cast<char>('a' + index % 26);
        for (const Cell& c : covered_cells(p))
            if (r.contains(c)) grid[c.row - 1][c.col - 1] = letter;
        ++index;
    }
    std::string out;
    for (const std::string& line : grid) {
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

constexpr int kCellSize = 24;

// 12 visually distinct fills, cycled by placement index.
constexpr std::array<const char*, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};

}  // namespace

std::string render_svg(const Tiling& t) {
    const Rect r = t.board.rect();
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << r.cols * kCellSize
        << "\" height=\"" << r.rows * kCellSize << "\" viewBox=\"0 0 " << r.cols * kCellSize << ' '
        << r.rows * kCellSize << "\">\n";
    int index = 0;
    for (const Placement& p : t.placements) {
        const char* fill = kPalette[index % kPalette.size()];
        for (const Cell& c : covered_cells(p)) {
            svg << "  <rect x=\"" << (c.col - 1) * kCellSize << "\" y=\"" << (c.row - 1) * kCellSize
                << "\" width=\"" << kCellSize << "\" height=\"" << kCellSize << "\" fill=\"" << fill
                << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        }
        ++index;
    }
    for (const Cell& c : t.board.missing()) {
        svg << "  <circle cx=\"" << (c.col - 1) * kCellSize + kCellSize / 2 << "\" cy=\""
            << (c.row - 1) * kCellSize + kCellSize / 2 << "\" r=\"" << kCellSize / 6
            << "\" fill=\"#222222\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tromino
