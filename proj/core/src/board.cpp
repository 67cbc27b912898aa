#include "tromino/board.hpp"

#include <algorithm>
#include <array>

namespace tromino {

bool is_tromino(PlacementKind k) {
    switch (k) {
        case PlacementKind::TrominoNE:
        case PlacementKind::TrominoNW:
        case PlacementKind::TrominoSE:
        case PlacementKind::TrominoSW:
            return true;
        default:
            return false;
    }
}

int placement_size(PlacementKind k) {
    if (is_tromino(k)) return 3;
    return k == PlacementKind::Monomino ? 1 : 2;
}

std::vector<Cell> covered_cells(const Placement& p) {
    const int r = p.anchor.row;
    const int c = p.anchor.col;
    switch (p.kind) {
        case PlacementKind::TrominoNE:
            return {{r, c}, {r + 1, c}, {r + 1, c + 1}};
        case PlacementKind::TrominoNW:
            return {{r, c + 1}, {r + 1, c}, {r + 1, c + 1}};
        case PlacementKind::TrominoSE:
            return {{r, c}, {r, c + 1}, {r + 1, c}};
        case PlacementKind::TrominoSW:
            return {{r, c}, {r, c + 1}, {r + 1, c + 1}};
        case PlacementKind::DominoH:
            return {{r, c}, {r, c + 1}};
        case PlacementKind::DominoV:
            return {{r, c}, {r + 1, c}};
        case PlacementKind::Monomino:
            return {{r, c}};
    }
    return {};
}

Placement placement_from_cells(const std::vector<Cell>& in) {
    std::vector<Cell> cells = in;
    std::sort(cells.begin(), cells.end());
    if (cells.size() == 1) return {PlacementKind::Monomino, cells[0], std::nullopt};
    if (cells.size() == 2) {
        const Cell a = cells[0], b = cells[1];
        if (a.row == b.row && b.col == a.col + 1) return {PlacementKind::DominoH, a, std::nullopt};
        if (a.col == b.col && b.row == a.row + 1) return {PlacementKind::DominoV, a, std::nullopt};
        throw Error(Errc::BadInput, "cells do not form a domino");
    }
    if (cells.size() == 3) {
        int r0 = cells[0].row, c0 = cells[0].col;
        int r1 = r0, c1 = c0;
        for (const Cell& c : cells) {
            r0 = std::min(r0, c.row);
            c0 = std::min(c0, c.col);
            r1 = std::max(r1, c.row);
            c1 = std::max(c1, c.col);
        }
        if (r1 - r0 == 1 && c1 - c0 == 1) {
            const std::array<std::pair<Cell, PlacementKind>, 4> corners = {{
                {{r0, c1}, PlacementKind::TrominoNE},
                {{r0, c0}, PlacementKind::TrominoNW},
                {{r1, c1}, PlacementKind::TrominoSE},
                {{r1, c0}, PlacementKind::TrominoSW},
            }};
            for (const auto& [corner, kind] : corners) {
                if (!std::binary_search(cells.begin(), cells.end(), corner))
                    return {kind, {r0, c0}, std::nullopt};
            }
        }
        throw Error(Errc::BadInput, "cells do not form a right tromino");
    }
    throw Error(Errc::BadInput, "placement must cover 1-3 cells");
}

DeficientBoard::DeficientBoard(Rect rect, std::vector<Cell> missing)
    : rect_(rect), missing_(std::move(missing)) {
    if (rect_.rows < 1 || rect_.cols < 1)
        throw Error(Errc::BadShape, "rectangle dimensions must be positive");
    std::sort(missing_.begin(), missing_.end());
    if (std::adjacent_find(missing_.begin(), missing_.end()) != missing_.end())
        throw Error(Errc::BadInput, "missing cells must be distinct");
    if (missing_.size() > 2)
        throw Error(Errc::BadInput, "at most two missing cells are supported");
    for (const Cell& c : missing_)
        if (!rect_.contains(c)) throw Error(Errc::BadInput, "missing cell outside rectangle");
}

DeficientBoard::DeficientBoard(int rows, int cols, std::vector<Cell> missing)
    : DeficientBoard(Rect{rows, cols}, std::move(missing)) {}

bool DeficientBoard::is_missing(Cell c) const {
    return std::binary_search(missing_.begin(), missing_.end(), c);
}

bool DeficientBoard::is_domino_deficient() const {
    if (missing_.size() != 2) return false;
    const Cell a = missing_[0], b = missing_[1];
    return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

Cell apply_symmetry(Cell c, SymmetryOp s, Rect frame) {
    switch (s) {
        case SymmetryOp::Identity: return c;
        case SymmetryOp::FlipH: return {c.row, frame.cols + 1 - c.col};
        case SymmetryOp::FlipV: return {frame.rows + 1 - c.row, c.col};
        case SymmetryOp::Rot180: return {frame.rows + 1 - c.row, frame.cols + 1 - c.col};
        case SymmetryOp::Transpose: return {c.col, c.row};
    }
    return c;
}

Direction apply_symmetry(Direction d, SymmetryOp s) {
    auto flip_ew = [](Direction x) {
        if (x == Direction::East) return Direction::West;
        if (x == Direction::West) return Direction::East;
        return x;
    };
    auto flip_ns = [](Direction x) {
        if (x == Direction::North) return Direction::South;
        if (x == Direction::South) return Direction::North;
        return x;
    };
    switch (s) {
        case SymmetryOp::Identity: return d;
        case SymmetryOp::FlipH: return flip_ew(d);
        case SymmetryOp::FlipV: return flip_ns(d);
        case SymmetryOp::Rot180: return flip_ew(flip_ns(d));
        case SymmetryOp::Transpose:
            switch (d) {
                case Direction::North: return Direction::West;
                case Direction::West: return Direction::North;
                case Direction::South: return Direction::East;
                case Direction::East: return Direction::South;
            }
    }
    return d;
}

DeficientBoard apply_symmetry(const DeficientBoard& b, SymmetryOp s) {
    Rect r = b.rect();
    if (s == SymmetryOp::Transpose) std::swap(r.rows, r.cols);
    std::vector<Cell> missing;
    missing.reserve(b.missing().size());
    for (const Cell& c : b.missing()) missing.push_back(apply_symmetry(c, s, b.rect()));
    return DeficientBoard(r, std::move(missing));
}

Placement apply_symmetry(const Placement& p, SymmetryOp s, Rect frame) {
    std::vector<Cell> cells = covered_cells(p);
    for (Cell& c : cells) c = apply_symmetry(c, s, frame);
    Placement out = placement_from_cells(cells);
    if (p.direction) out.direction = apply_symmetry(*p.direction, s);
    return out;
}

Tiling apply_symmetry(const Tiling& t, SymmetryOp s) {
    Tiling out;
    out.board = apply_symmetry(t.board, s);
    out.placements.reserve(t.placements.size());
    for (const Placement& p : t.placements)
        out.placements.push_back(apply_symmetry(p, s, t.board.rect()));
    return out;
}

namespace {

DeficientBoard shifted(const DeficientBoard& b, int dr, int dc, int lo_r, int hi_r, int lo_c,
                       int hi_c) {
    for (const Cell& c : b.missing()) {
        if (c.row >= lo_r && c.row <= hi_r && c.col >= lo_c && c.col <= hi_c)
            throw Error(Errc::ShiftThroughDeficiency, "missing cell lies in the detached block");
    }
    std::vector<Cell> missing;
    missing.reserve(b.missing().size());
    for (const Cell& c : b.missing()) missing.push_back({c.row + dr, c.col + dc});
    return DeficientBoard(b.rect(), std::move(missing));
}

}  // namespace

DeficientBoard hquad_shift(const DeficientBoard& b, int k, HSide side) {
    if (k < 0 || k > b.rect().cols) throw Error(Errc::BadInput, "invalid shift width");
    if (k == 0) return b;
    if (side == HSide::Left)  // detach leftmost k columns, reattach on the right
        return shifted(b, 0, -k, 1, b.rect().rows, 1, k);
    return shifted(b, 0, k, 1, b.rect().rows, b.rect().cols - k + 1, b.rect().cols);
}

DeficientBoard vquad_shift(const DeficientBoard& b, int k, VSide side) {
    if (k < 0 || k > b.rect().rows) throw Error(Errc::BadInput, "invalid shift height");
    if (k == 0) return b;
    if (side == VSide::Top) return shifted(b, -k, 0, 1, k, 1, b.rect().cols);
    return shifted(b, k, 0, b.rect().rows - k + 1, b.rect().rows, 1, b.rect().cols);
}

ValidationReport validate_tiling(const Tiling& t) {
    const Rect r = t.board.rect();
    std::vector<char> state(static_cast<size_t>(r.area()), 0);
    auto idx = [&](Cell c) { return static_cast<size_t>(c.row - 1) * r.cols + (c.col - 1); };
    for (const Cell& c : t.board.missing()) state[idx(c)] = 2;
    for (const Placement& p : t.placements) {
        for (const Cell& c : covered_cells(p)) {
            if (!r.contains(c)) return {false, ViolationKind::OutOfBounds, c};
            if (state[idx(c)] == 2) return {false, ViolationKind::CoversMissing, c};
            if (state[idx(c)] == 1) return {false, ViolationKind::Overlap, c};
            state[idx(c)] = 1;
        }
    }
    for (int row = 1; row <= r.rows; ++row)
        for (int col = 1; col <= r.cols; ++col)
            if (state[idx({row, col})] == 0) return {false, ViolationKind::Uncovered, Cell{row, col}};
    return {};
}

std::string to_string(PlacementKind k) {
    switch (k) {
        case PlacementKind::TrominoNE: return "TROMINO_NE";
        case PlacementKind::TrominoNW: return "TROMINO_NW";
        case PlacementKind::TrominoSE: return "TROMINO_SE";
        case PlacementKind::TrominoSW: return "TROMINO_SW";
        case PlacementKind::DominoH: return "DOMINO_H";
        case PlacementKind::DominoV: return "DOMINO_V";
        case PlacementKind::Monomino: return "MONOMINO";
    }
    return "?";
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::North: return "N";
        case Direction::South: return "S";
        case Direction::East: return "E";
        case Direction::West: return "W";
    }
    return "?";
}

std::string to_string(SymmetryOp s) {
    switch (s) {
        case SymmetryOp::Identity: return "IDENTITY";
        case SymmetryOp::FlipH: return "FLIP_H";
        case SymmetryOp::FlipV: return "FLIP_V";
        case SymmetryOp::Rot180: return "ROT_180";
        case SymmetryOp::Transpose: return "TRANSPOSE";
    }
    return "?";
}

PlacementKind placement_kind_from_string(const std::string& s) {
    if (s == "TROMINO_NE") return PlacementKind::TrominoNE;
    if (s == "TROMINO_NW") return PlacementKind::TrominoNW;
    if (s == "TROMINO_SE") return PlacementKind::TrominoSE;
    if (s == "TROMINO_SW") return PlacementKind::TrominoSW;
    if (s == "DOMINO_H") return PlacementKind::DominoH;
    if (s == "DOMINO_V") return PlacementKind::DominoV;
    if (s == "MONOMINO") return PlacementKind::Monomino;
    throw Error(Errc::BadInput, "unknown placement kind: " + s);
}

Direction direction_from_string(const std::string& s) {
    if (s == "N") return Direction::North;
    if (s == "S") return Direction::South;
    if (s == "E") return Direction::East;
    if (s == "W") return Direction::West;
    throw Error(Errc::BadInput, "unknown direction: " + s);
}

}  // namespace tromino
