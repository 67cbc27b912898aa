#include "tromino/stretch.hpp"

#include <algorithm>
#include <map>

namespace tromino {

namespace {

// tromino -> (directed domino, monomino); the monomino sits to the right of
// the arrowhead when facing along the arrow
void split_tromino(const Placement& p, std::vector<Placement>& out) {
    const int r = p.anchor.row;
    const int c = p.anchor.col;
    switch (p.kind) {
        case PlacementKind::TrominoSE:
            out.push_back({PlacementKind::DominoV, {r, c}, Direction::North});
            out.push_back({PlacementKind::Monomino, {r, c + 1}, std::nullopt});
            return;
        case PlacementKind::TrominoSW:
            out.push_back({PlacementKind::DominoH, {r, c}, Direction::East});
            out.push_back({PlacementKind::Monomino, {r + 1, c + 1}, std::nullopt});
            return;
        case PlacementKind::TrominoNE:
            out.push_back({PlacementKind::DominoH, {r + 1, c}, Direction::West});
            out.push_back({PlacementKind::Monomino, {r, c}, std::nullopt});
            return;
        case PlacementKind::TrominoNW:
            out.push_back({PlacementKind::DominoV, {r, c + 1}, Direction::South});
            out.push_back({PlacementKind::Monomino, {r + 1, c}, std::nullopt});
            return;
        default:
            throw Error(Errc::BadInput, "only trominoes are split");
    }
}

ColouredDominoTiling stretch_horizontal(const Tiling& monodic) {
    const Rect r = monodic.board.rect();
    ColouredDominoTiling out;
    out.tiling.board = DeficientBoard(r.rows, 2 * r.cols);
    for (const Placement& p : monodic.placements) {
        const int i = p.anchor.row;
        const int j = p.anchor.col;
        const TileColour colour =
            p.kind == PlacementKind::Monomino ? TileColour::Blue : TileColour::Red;
        switch (p.kind) {
            case PlacementKind::Monomino:
                out.tiling.placements.push_back({PlacementKind::DominoH, {i, 2 * j - 1}, std::nullopt});
                out.colours.push_back(colour);
                break;
            case PlacementKind::DominoH:
                out.tiling.placements.push_back({PlacementKind::DominoH, {i, 2 * j - 1}, std::nullopt});
                out.tiling.placements.push_back({PlacementKind::DominoH, {i, 2 * j + 1}, std::nullopt});
                out.colours.push_back(colour);
                out.colours.push_back(colour);
                break;
            case PlacementKind::DominoV:
                out.tiling.placements.push_back({PlacementKind::DominoV, {i, 2 * j - 1}, std::nullopt});
                out.tiling.placements.push_back({PlacementKind::DominoV, {i, 2 * j}, std::nullopt});
                out.colours.push_back(colour);
                out.colours.push_back(colour);
                break;
            default:
                throw Error(Errc::BadInput, "monodic tilings hold only dominoes and monominoes");
        }
    }
    return out;
}

ColouredDominoTiling transpose_coloured(const ColouredDominoTiling& c) {
    ColouredDominoTiling out;
    out.tiling = apply_symmetry(c.tiling, SymmetryOp::Transpose);
    out.colours = c.colours;
    return out;
}

Tiling unstretch_horizontal(const ColouredDominoTiling& c) {
    const Rect r = c.tiling.board.rect();
    if (r.cols % 2 != 0) throw Error(Errc::NotInImage, "stretched boards have even width");
    if (!c.tiling.board.missing().empty())
        throw Error(Errc::NotInImage, "stretched tilings cover a full rectangle");
    if (c.colours.size() != c.tiling.placements.size())
        throw Error(Errc::BadInput, "one colour per placement required");
    if (!validate_tiling(c.tiling).ok)
        throw Error(Errc::NotInImage, "not a valid domino tiling");

    Tiling out;
    out.board = DeficientBoard(r.rows, r.cols / 2);
    // red cells recovered from column-aligned horizontal dominoes, per row
    std::map<int, std::vector<int>> red_runs;
    // vertical dominoes must come in red side-by-side pairs within a column pair
    std::map<std::pair<int, int>, int> vertical_seen;  // (row, source col) -> count

    for (size_t idx = 0; idx < c.tiling.placements.size(); ++idx) {
        const Placement& p = c.tiling.placements[idx];
        const TileColour colour = c.colours[idx];
        const int i = p.anchor.row;
        const int j = p.anchor.col;
        if (p.kind == PlacementKind::DominoH) {
            if (j % 2 == 0)
                throw Error(Errc::NotInImage, "horizontal domino straddles a cell-pair boundary");
            const int src = (j + 1) / 2;
            if (colour == TileColour::Blue) {
                out.placements.push_back({PlacementKind::Monomino, {i, src}, std::nullopt});
            } else {
                red_runs[i].push_back(src);
            }
        } else if (p.kind == PlacementKind::DominoV) {
            if (colour == TileColour::Blue)
                throw Error(Errc::NotInImage, "vertical dominoes in the image are red");
            vertical_seen[{i, (j + 1) / 2}] += 1;
        } else {
            throw Error(Errc::NotInImage, "only dominoes appear in stretched tilings");
        }
    }
    for (const auto& [key, count] : vertical_seen) {
        if (count != 2)
            throw Error(Errc::NotInImage, "vertical domino lacks its stretched partner");
        out.placements.push_back({PlacementKind::DominoV, {key.first, key.second}, std::nullopt});
    }
    for (auto& [row, cols] : red_runs) {
        std::sort(cols.begin(), cols.end());
        for (size_t k = 0; k < cols.size(); ++k) {
            if (k + 1 >= cols.size() || cols[k + 1] != cols[k] + 1)
                throw Error(Errc::NotInImage, "red cells do not pair into dominoes");
            out.placements.push_back({PlacementKind::DominoH, {row, cols[k]}, std::nullopt});
            ++k;
        }
    }
    std::sort(out.placements.begin(), out.placements.end(),
              [](const Placement& a, const Placement& b) { return a.anchor < b.anchor; });
    if (!validate_tiling(out).ok) throw Error(Errc::NotInImage, "unstretched tiling is invalid");
    return out;
}

}  // namespace

Tiling to_directed_monodic(const Tiling& t) {
    int undirected_dominoes = 0;
    Tiling out;
    out.board = DeficientBoard(t.board.rect().rows, t.board.rect().cols);
    for (const Placement& p : t.placements) {
        if (is_tromino(p.kind)) {
            split_tromino(p, out.placements);
        } else if (p.kind == PlacementKind::DominoH || p.kind == PlacementKind::DominoV) {
            if (++undirected_dominoes > 1)
                throw Error(Errc::BadInput, "at most one undirected domino is permitted");
            out.placements.push_back({p.kind, p.anchor, std::nullopt});
        } else {
            throw Error(Errc::BadInput, "unexpected monomino in a tromino tiling");
        }
    }
    if (t.board.is_domino_deficient()) {
        if (undirected_dominoes > 0)
            throw Error(Errc::BadInput, "deficient boards already supply the undirected domino");
        out.placements.push_back(
            placement_from_cells({t.board.missing()[0], t.board.missing()[1]}));
    } else if (!t.board.missing().empty()) {
        throw Error(Errc::BadInput, "deficiency must be a domino");
    }
    return out;
}

ColouredDominoTiling stretch_map(const Tiling& t, StretchAxis axis) {
    Tiling monodic = to_directed_monodic(t);
    if (axis == StretchAxis::Horizontal) return stretch_horizontal(monodic);
    Tiling transposed = apply_symmetry(monodic, SymmetryOp::Transpose);
    return transpose_coloured(stretch_horizontal(transposed));
}

Tiling unstretch(const ColouredDominoTiling& c, StretchAxis axis) {
    if (axis == StretchAxis::Horizontal) return unstretch_horizontal(c);
    return apply_symmetry(unstretch_horizontal(transpose_coloured(c)), SymmetryOp::Transpose);
}

}  // namespace tromino
