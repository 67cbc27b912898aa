#include "tromino/solver.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <unordered_set>

namespace tromino {

namespace {

constexpr int kWords = 4;  // 4 * 64 = 256 cells of headroom

struct Mask {
    std::array<std::uint64_t, kWords> w{};

    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool contains(const Mask& sub) const {
        for (int i = 0; i < kWords; ++i)
            if ((w[i] & sub.w[i]) != sub.w[i]) return false;
        return true;
    }
    void remove(const Mask& sub) {
        for (int i = 0; i < kWords; ++i) w[i] &= ~sub.w[i];
    }
    void add(const Mask& sub) {
        for (int i = 0; i < kWords; ++i) w[i] |= sub.w[i];
    }
    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
    bool operator==(const Mask&) const = default;
};

struct StateKey {
    Mask free;
    int budget;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(k.budget);
        for (std::uint64_t x : k.free.w) {
            x *= 0xff51afd7ed558ccdULL;
            x ^= x >> 33;
            h = h * 0x100000001b3ULL ^ x;
        }
        return static_cast<size_t>(h);
    }
};

struct Candidate {
    Mask cells;
    Placement placement;
    bool is_domino;
};

class ExactCover {
public:
    ExactCover(const DeficientBoard& board, const SolveOptions& opts)
        : board_(board), budget_(opts.domino_budget) {
        rows_ = board.rect().rows;
        cols_ = board.rect().cols;
        for (int r = 1; r <= rows_; ++r)
            for (int c = 1; c <= cols_; ++c)
                if (!board.is_missing({r, c})) free_.set(index(r, c));
        build_neighbors();
        build_candidates();
    }

    // Visits tilings in deterministic order until `visit` returns false.
    template <typename Visit>
    void search(Visit&& visit) {
        stopped_ = false;
        dfs(free_, budget_, visit);
    }

private:
    int index(int r, int c) const { return (r - 1) * cols_ + (c - 1); }

    void build_neighbors() {
        neighbors_.assign(static_cast<size_t>(rows_) * cols_, {});
        for (int r = 1; r <= rows_; ++r) {
            for (int c = 1; c <= cols_; ++c) {
                auto& list = neighbors_[index(r, c)];
                int count = 0;
                if (r > 1) list[count++] = index(r - 1, c);
                if (r < rows_) list[count++] = index(r + 1, c);
                if (c > 1) list[count++] = index(r, c - 1);
                if (c < cols_) list[count++] = index(r, c + 1);
                while (count < 4) list[count++] = -1;
            }
        }
    }

    // Sound pruning: every connected free component must be coverable. A
    // component of size 1 mod 3 never is; a 1-wide line holds no tromino, so
    // it must be exactly one domino; each size-2-mod-3 component consumes one
    // unit of the domino budget.
    bool feasible(const Mask& free, int budget) {
        Mask remaining = free;
        int dominoes_needed = 0;
        while (true) {
            const int start = remaining.first();
            if (start < 0) break;
            queue_.clear();
            queue_.push_back(start);
            remaining.clear(start);
            int size = 0;
            int min_r = rows_, max_r = -1, min_c = cols_, max_c = -1;
            for (size_t head = 0; head < queue_.size(); ++head) {
                const int cell = queue_[head];
                ++size;
                const int r = cell / cols_, c = cell % cols_;
                min_r = std::min(min_r, r);
                max_r = std::max(max_r, r);
                min_c = std::min(min_c, c);
                max_c = std::max(max_c, c);
                for (int next : neighbors_[cell]) {
                    if (next < 0) break;
                    if (remaining.test(next)) {
                        remaining.clear(next);
                        queue_.push_back(next);
                    }
                }
            }
            if (min_r == max_r || min_c == max_c) {  // line component
                if (size != 2) return false;
                ++dominoes_needed;
            } else if (size % 3 == 1) {
                return false;
            } else if (size % 3 == 2) {
                ++dominoes_needed;
            }
            if (dominoes_needed > budget) return false;
        }
        return true;
    }

    void build_candidates() {
        candidates_.resize(static_cast<size_t>(rows_) * cols_);
        // per kind, enumerate every in-bounds placement once and register it
        // with each of its cells; per-cell lists are then sorted by
        // (kind, anchor) to fix the branching order
        const PlacementKind kinds[] = {PlacementKind::TrominoNE, PlacementKind::TrominoNW,
                                       PlacementKind::TrominoSE, PlacementKind::TrominoSW,
                                       PlacementKind::DominoH, PlacementKind::DominoV};
        for (PlacementKind kind : kinds) {
            const bool domino = !is_tromino(kind);
            if (domino && budget_ == 0) continue;
            for (int r = 1; r <= rows_; ++r) {
                for (int c = 1; c <= cols_; ++c) {
                    Placement p{kind, {r, c}, std::nullopt};
                    Mask mask;
                    bool ok = true;
                    for (const Cell& cell : covered_cells(p)) {
                        if (cell.row > rows_ || cell.col > cols_ || board_.is_missing(cell)) {
                            ok = false;
                            break;
                        }
                        mask.set(index(cell.row, cell.col));
                    }
                    if (!ok) continue;
                    for (const Cell& cell : covered_cells(p))
                        candidates_[index(cell.row, cell.col)].push_back({mask, p, domino});
                }
            }
        }
        for (auto& list : candidates_) {
            std::stable_sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
                if (a.placement.kind != b.placement.kind) return a.placement.kind < b.placement.kind;
                return a.placement.anchor < b.placement.anchor;
            });
        }
    }

    template <typename Visit>
    bool dfs(Mask free, int budget, Visit&& visit) {
        if (free.empty()) {
            if (!visit(stack_)) stopped_ = true;
            return true;
        }
        const StateKey key{free, budget};
        if (dead_.contains(key)) return false;
        if (!feasible(free, budget)) {
            if (dead_.size() >= kDeadCap) dead_.clear();
            dead_.insert(key);
            return false;
        }
        const int cell = free.first();
        bool any = false;
        for (const Candidate& cand : candidates_[cell]) {
            if (cand.is_domino && budget == 0) continue;
            if (!free.contains(cand.cells)) continue;
            Mask next = free;
            next.remove(cand.cells);
            stack_.push_back(cand.placement);
            any |= dfs(next, budget - (cand.is_domino ? 1 : 0), visit);
            stack_.pop_back();
            if (stopped_) return any;
        }
        if (!any) {
            if (dead_.size() >= kDeadCap) dead_.clear();
            dead_.insert(key);
        }
        return any;
    }

    static constexpr size_t kDeadCap = 1u << 22;

    const DeficientBoard& board_;
    int rows_ = 0, cols_ = 0, budget_ = 0;
    Mask free_;
    bool stopped_ = false;
    std::vector<std::array<int, 4>> neighbors_;
    std::vector<int> queue_;
    std::vector<std::vector<Candidate>> candidates_;
    std::vector<Placement> stack_;
    std::unordered_set<StateKey, StateKeyHash> dead_;
};

void check_cap(const DeficientBoard& b, const SolveOptions& opts) {
    if (b.rect().area() > opts.cell_cap)
        throw Error(Errc::CapExceeded, "board area exceeds the solver cell cap");
    if (b.rect().area() > kWords * 64)
        throw Error(Errc::CapExceeded, "board area exceeds the solver's structural limit");
    if (opts.domino_budget < 0 || opts.domino_budget > 1)
        throw Error(Errc::BadInput, "the domino budget must be 0 or 1");
}

}  // namespace

std::optional<Tiling> solve_exact(const DeficientBoard& b, const SolveOptions& opts) {
    check_cap(b, opts);
    ExactCover solver(b, opts);
    std::optional<Tiling> result;
    solver.search([&](const std::vector<Placement>& placements) {
        result = Tiling{b, placements};
        return false;  // stop at the first tiling
    });
    return result;
}

std::vector<Tiling> enumerate_tilings(const DeficientBoard& b, std::uint64_t limit,
                                      const SolveOptions& opts) {
    check_cap(b, opts);
    ExactCover solver(b, opts);
    std::vector<Tiling> out;
    if (limit == 0) return out;
    solver.search([&](const std::vector<Placement>& placements) {
        out.push_back(Tiling{b, placements});
        return out.size() < limit;
    });
    return out;
}

}  // namespace tromino
