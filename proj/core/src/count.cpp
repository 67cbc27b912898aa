#include "tromino/count.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace tromino {

namespace {

constexpr int kWidthCap = 16;

enum class TileMode { TrominoOnly, TrominoPlusOneDomino, DominoOnly };

struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> blocked;  // bit r-1 set = cell (r, col) absent
};

// Per-column transfer: a state is the set of cells of the current column
// already covered by placements anchored in the previous column. Within a
// column a DFS enumerates every way to complete it, emitting the overhang
// pushed into the next column. Two state layers track the domino budget.
class ColumnCounter {
public:
    ColumnCounter(const Grid& g, TileMode mode) : g_(g), mode_(mode) {
        layers_ = (mode == TileMode::TrominoPlusOneDomino) ? 2 : 1;
        states_.assign((1u << g_.rows) * layers_, BigCount(0));
        next_.assign((1u << g_.rows) * layers_, BigCount(0));
    }

    BigCount run() {
        states_[slot(0, 0)] = 1;
        for (col_ = 1; col_ <= g_.cols; ++col_) {
            for (auto& v : next_) v = 0;
            cur_blocked_ = g_.blocked[col_ - 1];
            next_blocked_ = col_ < g_.cols ? g_.blocked[col_] : 0u;
            for (int used = 0; used < layers_; ++used) {
                for (std::uint32_t mask = 0; mask < (1u << g_.rows); ++mask) {
                    const BigCount& cnt = states_[slot(mask, used)];
                    if (cnt == 0) continue;
                    fill(1, mask | cur_blocked_, 0u, used, cnt);
                }
            }
            states_.swap(next_);
        }
        BigCount total = 0;
        const int want = (mode_ == TileMode::TrominoPlusOneDomino) ? 1 : 0;
        total = states_[slot(0, want)];
        return total;
    }

private:
    size_t slot(std::uint32_t mask, int used) const {
        return static_cast<size_t>(used) * (1u << g_.rows) + mask;
    }

    bool next_col_free(int r, std::uint32_t pend) const {
        return col_ < g_.cols && r >= 1 && r <= g_.rows && !((pend >> (r - 1)) & 1) &&
               !((next_blocked_ >> (r - 1)) & 1);
    }

    bool cur_col_free(int r, std::uint32_t cur) const {
        return r >= 1 && r <= g_.rows && !((cur >> (r - 1)) & 1);
    }

    void fill(int r, std::uint32_t cur, std::uint32_t pend, int used, const BigCount& cnt) {
        while (r <= g_.rows && ((cur >> (r - 1)) & 1)) ++r;
        if (r > g_.rows) {
            next_[slot(pend, used)] += cnt;
            return;
        }
        const std::uint32_t bit = 1u << (r - 1);
        if (mode_ != TileMode::DominoOnly) {
            // L pieces whose scan-first cell is (r, col); cells listed per kind
            if (cur_col_free(r + 1, cur) && next_col_free(r + 1, pend))  // NE
                fill(r + 1, cur | bit | (bit << 1), pend | (bit << 1), used, cnt);
            if (next_col_free(r - 1, pend) && next_col_free(r, pend))  // NW
                fill(r + 1, cur | bit, pend | (bit >> 1) | bit, used, cnt);
            if (cur_col_free(r + 1, cur) && next_col_free(r, pend))  // SE
                fill(r + 1, cur | bit | (bit << 1), pend | bit, used, cnt);
            if (next_col_free(r, pend) && next_col_free(r + 1, pend))  // SW
                fill(r + 1, cur | bit, pend | bit | (bit << 1), used, cnt);
        }
        const bool domino_ok = mode_ == TileMode::DominoOnly ||
                               (mode_ == TileMode::TrominoPlusOneDomino && used == 0);
        if (domino_ok) {
            const int next_used = (mode_ == TileMode::DominoOnly) ? 0 : 1;
            if (cur_col_free(r + 1, cur))  // vertical domino
                fill(r + 1, cur | bit | (bit << 1), pend, next_used, cnt);
            if (next_col_free(r, pend))  // horizontal domino
                fill(r + 1, cur | bit, pend | bit, next_used, cnt);
        }
    }

    const Grid& g_;
    TileMode mode_;
    int layers_ = 1;
    int col_ = 0;
    std::uint32_t cur_blocked_ = 0, next_blocked_ = 0;
    std::vector<BigCount> states_, next_;
};

BigCount count_grid(const Grid& g, TileMode mode) {
    if (g.rows > kWidthCap) throw Error(Errc::WidthCap, "DP width exceeds 16 rows");
    if (g.cols == 0) return mode == TileMode::TrominoPlusOneDomino ? BigCount(0) : BigCount(1);
    return ColumnCounter(g, mode).run();
}

Grid board_grid(const DeficientBoard& b, bool transpose) {
    Grid g;
    g.rows = transpose ? b.rect().cols : b.rect().rows;
    g.cols = transpose ? b.rect().rows : b.rect().cols;
    g.blocked.assign(static_cast<size_t>(g.cols), 0u);
    for (const Cell& c : b.missing()) {
        const int r = transpose ? c.col : c.row;
        const int col = transpose ? c.row : c.col;
        g.blocked[col - 1] |= 1u << (r - 1);
    }
    return g;
}

Grid rect_grid(Rect r) {
    Grid g;
    g.rows = r.rows <= kWidthCap ? r.rows : r.cols;
    g.cols = r.rows <= kWidthCap ? r.cols : r.rows;
    g.blocked.assign(static_cast<size_t>(g.cols), 0u);
    return g;
}

}  // namespace

BigCount count_tromino(const DeficientBoard& b) {
    const bool transpose = b.rect().rows > kWidthCap;
    if (transpose && b.rect().cols > kWidthCap)
        throw Error(Errc::WidthCap, "both board dimensions exceed 16");
    if (b.tile_area() % 3 != 0) return 0;
    return count_grid(board_grid(b, transpose), TileMode::TrominoOnly);
}

BigCount count_tromino_plus_one_domino(Rect r) {
    if ((r.area() - 2) % 3 != 0)
        throw Error(Errc::Area, "mixed count needs 3 | (mn - 2)");
    if (std::min(r.rows, r.cols) > kWidthCap)
        throw Error(Errc::WidthCap, "both board dimensions exceed 16");
    return count_grid(rect_grid(r), TileMode::TrominoPlusOneDomino);
}

BigCount count_tromino_plus_one_domino_by_sum(Rect r) {
    if ((r.area() - 2) % 3 != 0)
        throw Error(Errc::Area, "mixed count needs 3 | (mn - 2)");
    BigCount total = 0;
    for (int row = 1; row <= r.rows; ++row) {
        for (int col = 1; col <= r.cols; ++col) {
            if (col + 1 <= r.cols)
                total += count_tromino(DeficientBoard(r, {{row, col}, {row, col + 1}}));
            if (row + 1 <= r.rows)
                total += count_tromino(DeficientBoard(r, {{row, col}, {row + 1, col}}));
        }
    }
    return total;
}

BigCount count_domino(Rect r) {
    if (std::min(r.rows, r.cols) > kWidthCap)
        throw Error(Errc::WidthCap, "both board dimensions exceed 16");
    if (r.area() % 2 != 0) return 0;
    return count_grid(rect_grid(r), TileMode::DominoOnly);
}

BigCount count_interface(InterfaceKind kind, int t) {
    if (t < 0) throw Error(Errc::BadInput, "interface parameter must be >= 0");
    std::array<int, 4> width{};  // per-row right boundary, rows 1..4
    switch (kind) {
        case InterfaceKind::Straight: width = {3 * t, 3 * t, 3 * t, 3 * t}; break;
        case InterfaceKind::DeepJog: width = {3 * t + 1, 3 * t + 1, 3 * t - 1, 3 * t - 1}; break;
        case InterfaceKind::ShallowJog: width = {3 * t + 2, 3 * t + 2, 3 * t + 1, 3 * t + 1}; break;
    }
    if (*std::min_element(width.begin(), width.end()) < 0) return 0;
    Grid g;
    g.rows = 4;
    g.cols = *std::max_element(width.begin(), width.end());
    g.blocked.assign(static_cast<size_t>(g.cols), 0u);
    for (int row = 1; row <= 4; ++row)
        for (int col = width[row - 1] + 1; col <= g.cols; ++col)
            g.blocked[col - 1] |= 1u << (row - 1);
    return count_grid(g, TileMode::TrominoOnly);
}

}  // namespace tromino
