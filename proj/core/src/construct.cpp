#include "tromino/construct.hpp"

#include <algorithm>
#include <cassert>

#include "tromino/solver.hpp"

namespace tromino {

namespace {

void append_translated(const std::vector<Placement>& src, int dr, int dc,
                       std::vector<Placement>& out) {
    for (Placement p : src) {
        p.anchor.row += dr;
        p.anchor.col += dc;
        out.push_back(p);
    }
}

void tile_2x3_block(int r, int c, std::vector<Placement>& out) {
    out.push_back({PlacementKind::TrominoSE, {r, c}, std::nullopt});
    out.push_back({PlacementKind::TrominoNW, {r, c + 1}, std::nullopt});
}

void tile_3x2_block(int r, int c, std::vector<Placement>& out) {
    out.push_back({PlacementKind::TrominoSE, {r, c}, std::nullopt});
    out.push_back({PlacementKind::TrominoNW, {r + 1, c}, std::nullopt});
}

// Fill a region with 2x3 / 3x2 blocks. Caller guarantees one of the two
// block orientations divides the region.
void grid_region(int r0, int c0, int rows, int cols, std::vector<Placement>& pl) {
    if (rows % 3 == 0 && cols % 2 == 0) {
        for (int r = 0; r < rows; r += 3)
            for (int c = 0; c < cols; c += 2) tile_3x2_block(r0 + r, c0 + c, pl);
        return;
    }
    assert(rows % 2 == 0 && cols % 3 == 0);
    for (int r = 0; r < rows; r += 2)
        for (int c = 0; c < cols; c += 3) tile_2x3_block(r0 + r, c0 + c, pl);
}

void add_step(std::vector<DecompositionStep>& steps, int r0, int c0, int rows, int cols,
              DecompRule rule, const std::string& note = {}) {
    steps.push_back({{r0, c0}, {rows, cols}, rule, note});
}

// Chu-Johnsonbaugh assembly for a full sub-rectangle at (r0, c0).
// Requires 3 | rows*cols, min >= 2 and not 3 x odd; empty regions are no-ops.
void full_rect_region(int r0, int c0, int rows, int cols, std::vector<Placement>& pl,
                      std::vector<DecompositionStep>& steps) {
    if (rows == 0 || cols == 0) return;
    if (rows % 3 == 0 && cols % 2 == 0) {
        grid_region(r0, c0, rows, cols, pl);
        add_step(steps, r0, c0, rows, cols, DecompRule::BlockGrid);
        return;
    }
    if (cols % 3 == 0 && rows % 2 == 0) {
        grid_region(r0, c0, rows, cols, pl);
        add_step(steps, r0, c0, rows, cols, DecompRule::BlockGrid);
        return;
    }
    if (rows % 3 == 0 && rows % 2 == 0) {  // cols odd, >= 5
        full_rect_region(r0, c0, rows, cols - 3, pl, steps);
        grid_region(r0, c0 + cols - 3, rows, 3, pl);
        add_step(steps, r0, c0 + cols - 3, rows, 3, DecompRule::ThreeColumnStrip);
        return;
    }
    if (cols % 3 == 0 && cols % 2 == 0) {  // rows odd, >= 5
        full_rect_region(r0, c0, rows - 3, cols, pl, steps);
        grid_region(r0 + rows - 3, c0, 3, cols, pl);
        add_step(steps, r0 + rows - 3, c0, 3, cols, DecompRule::ThreeColumnStrip);
        return;
    }
    if (rows % 3 == 0 && rows % 2 == 1 && cols % 2 == 1) {  // rows = 9+6t, cols odd >= 5
        full_rect_region(r0, c0, rows, cols - 5, pl, steps);
        append_translated(base_case_tiling(DeficientBoard(9, 5)).placements, r0 - 1,
                          c0 + cols - 5 - 1, pl);
        add_step(steps, r0, c0 + cols - 5, 9, 5, DecompRule::SpecialNineByFive);
        if (rows > 9) {
            grid_region(r0 + 9, c0 + cols - 5, rows - 9, 2, pl);
            add_step(steps, r0 + 9, c0 + cols - 5, rows - 9, 2, DecompRule::BlockGrid);
            grid_region(r0 + 9, c0 + cols - 3, rows - 9, 3, pl);
            add_step(steps, r0 + 9, c0 + cols - 3, rows - 9, 3, DecompRule::ThreeColumnStrip);
        }
        return;
    }
    if (cols % 3 == 0 && cols % 2 == 1 && rows % 2 == 1) {  // cols = 9+6t, rows odd >= 5
        full_rect_region(r0 + 5, c0, rows - 5, cols, pl, steps);
        Tiling five_by_nine = apply_symmetry(base_case_tiling(DeficientBoard(9, 5)),
                                             SymmetryOp::Transpose);
        append_translated(five_by_nine.placements, r0 - 1, c0 - 1, pl);
        add_step(steps, r0, c0, 5, 9, DecompRule::SpecialNineByFive);
        if (cols > 9) {
            grid_region(r0, c0 + 9, 2, cols - 9, pl);
            add_step(steps, r0, c0 + 9, 2, cols - 9, DecompRule::BlockGrid);
            grid_region(r0 + 2, c0 + 9, 3, cols - 9, pl);
            add_step(steps, r0 + 2, c0 + 9, 3, cols - 9, DecompRule::ThreeColumnStrip);
        }
        return;
    }
    assert(false && "region not tileable by the full-rectangle rules");
}

DecompositionStep transpose_step(const DecompositionStep& s) {
    return {{s.origin.col, s.origin.row}, {s.size.cols, s.size.rows}, s.rule, s.note};
}

DecompositionStep map_step(const DecompositionStep& s, SymmetryOp op, Rect frame) {
    if (op == SymmetryOp::Identity) return s;
    if (op == SymmetryOp::Transpose) return transpose_step(s);
    DecompositionStep out = s;
    if (op == SymmetryOp::FlipH || op == SymmetryOp::Rot180)
        out.origin.col = frame.cols - s.origin.col - s.size.cols + 2;
    if (op == SymmetryOp::FlipV || op == SymmetryOp::Rot180)
        out.origin.row = frame.rows - s.origin.row - s.size.rows + 2;
    return out;
}

ConstructResult map_result(ConstructResult res, SymmetryOp op) {
    if (op == SymmetryOp::Identity) return res;
    const Rect frame = res.tiling.board.rect();
    res.tiling = apply_symmetry(res.tiling, op);
    for (DecompositionStep& s : res.steps) s = map_step(s, op, frame);
    return res;
}

// ---- two-row boards ---------------------------------------------------

ConstructResult direc_construct(const DeficientBoard& b) {
    const int n = b.rect().cols;
    const Cell a = b.missing()[0], d = b.missing()[1];
    ConstructResult out;
    out.tiling.board = b;
    auto& pl = out.tiling.placements;
    auto& steps = out.steps;
    if (a.col == d.col) {  // vertical domino at a column 3k+1
        const int c = a.col;
        if (c > 1) {
            grid_region(1, 1, 2, c - 1, pl);
            add_step(steps, 1, 1, 2, c - 1, DecompRule::BlockGrid);
        }
        add_step(steps, 1, c, 2, 1, DecompRule::BaseCase, "deficient-column");
        if (c < n) {
            grid_region(1, c + 1, 2, n - c, pl);
            add_step(steps, 1, c + 1, 2, n - c, DecompRule::BlockGrid);
        }
        return out;
    }
    // horizontal domino in row a.row at columns {3x+2, 3x+3}; two trominoes
    // bridge around it
    const int c = a.col;
    if (c > 2) {
        grid_region(1, 1, 2, c - 2, pl);
        add_step(steps, 1, 1, 2, c - 2, DecompRule::BlockGrid);
    }
    if (a.row == 1) {
        pl.push_back({PlacementKind::TrominoNE, {1, c - 1}, std::nullopt});
        pl.push_back({PlacementKind::TrominoNW, {1, c + 1}, std::nullopt});
    } else {
        pl.push_back({PlacementKind::TrominoSE, {1, c - 1}, std::nullopt});
        pl.push_back({PlacementKind::TrominoSW, {1, c + 1}, std::nullopt});
    }
    add_step(steps, 1, c - 1, 2, 4, DecompRule::BaseCase, "two-row-bridge");
    if (c + 2 < n) {
        grid_region(1, c + 3, 2, n - c - 2, pl);
        add_step(steps, 1, c + 3, 2, n - c - 2, DecompRule::BlockGrid);
    }
    return out;
}

// ---- sliding-window search for domino-deficient boards -----------------

struct Window {
    int offset = 0;
    int span = 0;
};

std::vector<Window> col_windows(int h, int n) {
    std::vector<Window> out;
    auto push_all = [&](int w, int step) {
        for (int s = 0; s + w <= n; s += step) out.push_back({s, w});
    };
    switch (h) {
        case 4:
            if (n == 5) return {{0, 5}};
            push_all(8, 3);
            push_all(11, 3);
            break;
        case 5:
            if (n == 7) return {{0, 7}};
            if (n % 6 == 4) {
                push_all(10, 6);
                push_all(16, 6);
            } else {
                push_all(13, 6);
            }
            break;
        case 7:
            if (n % 6 == 2) {
                push_all(8, 6);
                push_all(14, 6);
            } else {
                push_all(11, 6);
            }
            break;
        case 10:
        case 16:
            push_all(8, 3);
            break;
        case 13:
            push_all(n % 6 == 2 ? 8 : 11, 6);
            break;
        default:
            assert(false);
    }
    return out;
}

std::vector<Window> row_windows(int m) {
    if (m == 4 || m == 5 || m == 7 || m == 10) return {{0, m}};
    std::vector<Window> out;
    const int base = (m % 6 == 1) ? 7 : 10;
    for (int h : {base, base + 6}) {
        if (h > m) continue;
        for (int a = 0; a + h <= m; a += 6)
            if ((m - a - h) % 6 == 0) out.push_back({a, h});
    }
    std::sort(out.begin(), out.end(),
              [](const Window& x, const Window& y) { return std::tie(x.span, x.offset) < std::tie(y.span, y.offset); });
    return out;
}

// Board oriented to its family frame: 2 rows handled separately; here rows is
// one of {4, 5} or rows % 3 == 1 with rows >= 7.
ConstructResult windowed_construct(const DeficientBoard& b) {
    const int m = b.rect().rows;
    const int n = b.rect().cols;
    const Cell p1 = b.missing()[0], p2 = b.missing()[1];

    bool seen_any_containing = false;
    Window first_rw{}, first_cw{};

    for (const Window& rw : row_windows(m)) {
        if (p1.row <= rw.offset || p1.row > rw.offset + rw.span) continue;
        if (p2.row <= rw.offset || p2.row > rw.offset + rw.span) continue;
        for (const Window& cw : col_windows(rw.span, n)) {
            if (p1.col <= cw.offset || p1.col > cw.offset + cw.span) continue;
            if (p2.col <= cw.offset || p2.col > cw.offset + cw.span) continue;
            if (!seen_any_containing) {
                seen_any_containing = true;
                first_rw = rw;
                first_cw = cw;
            }
            const Cell l1{p1.row - rw.offset, p1.col - cw.offset};
            const Cell l2{p2.row - rw.offset, p2.col - cw.offset};
            const DeficientBoard window(rw.span, cw.span, {l1, l2});
            if (!decide(window).tileable) continue;

            ConstructResult out;
            out.tiling.board = b;
            auto& pl = out.tiling.placements;
            auto& steps = out.steps;
            full_rect_region(1, 1, rw.offset, n, pl, steps);
            full_rect_region(rw.offset + rw.span + 1, 1, m - rw.offset - rw.span, n, pl, steps);
            full_rect_region(rw.offset + 1, 1, rw.span, cw.offset, pl, steps);
            full_rect_region(rw.offset + 1, cw.offset + cw.span + 1, rw.span,
                             n - cw.offset - cw.span, pl, steps);
            append_translated(base_case_tiling(window).placements, rw.offset, cw.offset, pl);
            DecompRule rule = DecompRule::BaseCase;
            if (rw.span != first_rw.span || cw.span != first_cw.span)
                rule = DecompRule::JoinRepair;
            else if (rw.offset != first_rw.offset || cw.offset != first_cw.offset)
                rule = DecompRule::ShiftRepair;
            add_step(steps, rw.offset + 1, cw.offset + 1, rw.span, cw.span, rule,
                     "window-" + std::to_string(rw.span) + "x" + std::to_string(cw.span));
            return out;
        }
    }
    throw Error(Errc::BadInput, "no base window admits this deficiency");
}

ConstructResult construct_domino_deficient(const DeficientBoard& b) {
    const int rows = b.rect().rows;
    const int cols = b.rect().cols;
    const int lo = std::min(rows, cols);

    int want_rows;
    if (lo == 2) want_rows = 2;
    else if (lo == 4 || lo == 5) want_rows = lo;
    else want_rows = (rows % 3 == 1) ? rows : cols;

    const bool transpose = rows != want_rows;
    const DeficientBoard oriented = transpose ? apply_symmetry(b, SymmetryOp::Transpose) : b;
    ConstructResult res = oriented.rect().rows == 2 ? direc_construct(oriented)
                                                    : windowed_construct(oriented);
    return map_result(std::move(res), transpose ? SymmetryOp::Transpose : SymmetryOp::Identity);
}

// ---- one missing cell ---------------------------------------------------

ConstructResult construct_one_deficient(const DeficientBoard& b) {
    ConstructResult out;
    out.tiling.board = b;
    auto& pl = out.tiling.placements;
    auto& steps = out.steps;
    const Rect rect = b.rect();
    if (rect.rows == 2 && rect.cols == 2) {
        std::vector<Cell> cells;
        for (int r = 1; r <= 2; ++r)
            for (int c = 1; c <= 2; ++c)
                if (!b.is_missing({r, c})) cells.push_back({r, c});
        pl.push_back(placement_from_cells(cells));
        add_step(steps, 1, 1, 2, 2, DecompRule::BaseCase, "single-tromino");
        return out;
    }
    const Cell cell = b.missing()[0];
    int r0 = 1, c0 = 1, m = rect.rows, n = rect.cols;
    while (m > 13) {  // peel 6-row slabs off the side away from the cell
        if (cell.row <= r0 + m - 7) {
            full_rect_region(r0 + m - 6, c0, 6, n, pl, steps);
        } else {
            full_rect_region(r0, c0, 6, n, pl, steps);
            r0 += 6;
        }
        m -= 6;
    }
    while (n > 13) {
        if (cell.col <= c0 + n - 7) {
            full_rect_region(r0, c0 + n - 6, m, 6, pl, steps);
        } else {
            full_rect_region(r0, c0, m, 6, pl, steps);
            c0 += 6;
        }
        n -= 6;
    }
    const DeficientBoard core(m, n, {{cell.row - r0 + 1, cell.col - c0 + 1}});
    append_translated(base_case_tiling(core).placements, r0 - 1, c0 - 1, pl);
    add_step(steps, r0, c0, m, n, DecompRule::BaseCase, "deficient-core");
    return out;
}

}  // namespace

// ---- public operations ---------------------------------------------------

ConstructResult tile_full_rect(Rect r) {
    const int lo = std::min(r.rows, r.cols);
    const int hi = std::max(r.rows, r.cols);
    if (r.area() % 3 != 0 || lo < 2 || (lo == 3 && hi % 2 == 1))
        throw Error(Errc::UntileableRect, "rectangle admits no tromino tiling");
    ConstructResult out;
    out.tiling.board = DeficientBoard(r.rows, r.cols);
    full_rect_region(1, 1, r.rows, r.cols, out.tiling.placements, out.steps);
    return out;
}

ConstructResult tile_dog_eared(int rows, int cols, Corner corner,
                               DominoOrientation orientation) {
    if (rows < 4 || cols < 4 || (static_cast<long long>(rows) * cols - 2) % 3 != 0)
        throw Error(Errc::BadShape, "dog-eared boards need m, n >= 4 and 3 | (mn - 2)");

    // Normalize to the canonical frame: rows % 3 == 1 and the domino at the
    // top-right corner; undo the symmetries afterwards.
    std::vector<SymmetryOp> applied;
    int m = rows, n = cols;
    Corner cnr = corner;
    DominoOrientation orient = orientation;
    if (m % 3 != 1) {
        std::swap(m, n);
        applied.push_back(SymmetryOp::Transpose);
        if (cnr == Corner::TopRight) cnr = Corner::BottomLeft;
        else if (cnr == Corner::BottomLeft) cnr = Corner::TopRight;
        orient = orient == DominoOrientation::Horizontal ? DominoOrientation::Vertical
                                                         : DominoOrientation::Horizontal;
    }
    if (cnr == Corner::TopLeft) applied.push_back(SymmetryOp::FlipH);
    else if (cnr == Corner::BottomRight) applied.push_back(SymmetryOp::FlipV);
    else if (cnr == Corner::BottomLeft) applied.push_back(SymmetryOp::Rot180);

    ConstructResult res;
    res.tiling.board = DeficientBoard(
        m, n,
        orient == DominoOrientation::Horizontal
            ? std::vector<Cell>{{1, n - 1}, {1, n}}
            : std::vector<Cell>{{1, n}, {2, n}});
    auto& pl = res.tiling.placements;
    auto& steps = res.steps;
    auto corner_base = [&](int base_rows, int at_col) {
        const DeficientBoard base(base_rows, 5,
                                  orient == DominoOrientation::Horizontal
                                      ? std::vector<Cell>{{1, 4}, {1, 5}}
                                      : std::vector<Cell>{{1, 5}, {2, 5}});
        append_translated(base_case_tiling(base).placements, 0, at_col - 1, pl);
        add_step(steps, 1, at_col, base_rows, 5, DecompRule::BaseCase,
                 "dog-ear-" + std::to_string(base_rows) + "x5");
    };

    if (m == 4) {
        full_rect_region(1, 1, 4, n - 5, pl, steps);
        corner_base(4, n - 4);
    } else if (m == 7) {
        if ((n - 5) % 6 == 0) {
            full_rect_region(1, 1, 7, n - 5, pl, steps);
            corner_base(7, n - 4);
        } else {
            full_rect_region(1, 1, 7, n - 8, pl, steps);
            full_rect_region(5, n - 7, 3, 8, pl, steps);
            full_rect_region(1, n - 7, 4, 3, pl, steps);
            corner_base(4, n - 4);
        }
    } else {
        if ((n - 5) % 6 == 0) {
            full_rect_region(1, 1, m, n - 5, pl, steps);
            full_rect_region(5, n - 4, m - 4, 5, pl, steps);
            corner_base(4, n - 4);
        } else {
            full_rect_region(1, 1, m, n - 8, pl, steps);
            full_rect_region(5, n - 7, m - 4, 8, pl, steps);
            full_rect_region(1, n - 7, 4, 3, pl, steps);
            corner_base(4, n - 4);
        }
    }
    // applied lists the forward ops; involutions undo in reverse order
    for (auto it = applied.rbegin(); it != applied.rend(); ++it)
        res = map_result(std::move(res), *it);
    return res;
}

ConstructOutcome tile_nx4_2deficient(const DeficientBoard& b) {
    Verdict verdict = decide(b);
    if (!verdict.tileable) return {std::nullopt, verdict};

    const bool transpose = b.rect().cols != 4;
    const DeficientBoard ob = transpose ? apply_symmetry(b, SymmetryOp::Transpose) : b;
    const int m = ob.rect().rows;
    const Cell c1 = ob.missing()[0], c2 = ob.missing()[1];

    ConstructResult res;
    res.tiling.board = ob;
    auto& pl = res.tiling.placements;
    auto& steps = res.steps;
    auto slab = [&](int row0, int height) {
        if (height > 0) {
            grid_region(row0, 1, height, 4, pl);
            add_step(steps, row0, 1, height, 4, DecompRule::BlockGrid);
        }
    };
    auto finish = [&]() {
        return ConstructOutcome{
            map_result(std::move(res), transpose ? SymmetryOp::Transpose : SymmetryOp::Identity),
            verdict};
    };

    // Two 4x4 windows isolating one missing cell each, 3-row slabs elsewhere.
    for (int a1 = 0; a1 + 8 <= m; a1 += 3) {
        if (c1.row <= a1 || c1.row > a1 + 4 || c2.row <= a1 + 4) continue;
        for (int a2 = a1 + 4; a2 + 4 <= m; a2 += 3) {
            if (c2.row <= a2 || c2.row > a2 + 4) continue;
            slab(1, a1);
            slab(a1 + 5, a2 - a1 - 4);
            slab(a2 + 5, m - a2 - 4);
            for (const auto& [a, cell] : {std::pair(a1, c1), std::pair(a2, c2)}) {
                const DeficientBoard window(4, 4, {{cell.row - a, cell.col}});
                append_translated(base_case_tiling(window).placements, a, 0, pl);
                add_step(steps, a + 1, 1, 4, 4, DecompRule::BaseCase, "isolated-cell-window");
            }
            return finish();
        }
    }
    // Reduce to the searched 8x4 table, joining a 3x4 slab when the local
    // position is bad there.
    for (int span : {8, 11}) {
        for (int s = 0; s + span <= m; s += 3) {
            if (c1.row <= s || c2.row > s + span) continue;
            const DeficientBoard window(span, 4, {{c1.row - s, c1.col}, {c2.row - s, c2.col}});
            if (!decide(window).tileable) continue;
            slab(1, s);
            slab(s + span + 1, m - s - span);
            append_translated(base_case_tiling(window).placements, s, 0, pl);
            add_step(steps, s + 1, 1, span, 4,
                     span == 8 ? DecompRule::BaseCase : DecompRule::JoinRepair,
                     "window-" + std::to_string(span) + "x4");
            return finish();
        }
    }
    throw Error(Errc::BadInput, "no decomposition admits this deficiency");
}

ConstructOutcome construct_tiling(const DeficientBoard& b) {
    Verdict verdict = decide(b);
    if (!verdict.tileable) return {std::nullopt, verdict};
    if (b.missing().size() == 2 && !b.is_domino_deficient()) return tile_nx4_2deficient(b);

    ConstructResult res;
    if (b.missing().empty()) {
        if (b.tile_area() == 0) {
            res.tiling.board = b;  // nothing to place
        } else {
            res = tile_full_rect(b.rect());
        }
    } else if (b.missing().size() == 1) {
        res = construct_one_deficient(b);
    } else if (b.tile_area() == 0) {
        res.tiling.board = b;  // R(1,2) minus its domino
    } else {
        res = construct_domino_deficient(b);
    }
    return {std::move(res), verdict};
}

}  // namespace tromino
