#ifndef TROMINO_BOARD_HPP
#define TROMINO_BOARD_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tromino {

enum class Errc {
    BadShape,
    ShiftThroughDeficiency,
    UntileableRect,
    UnsupportedShape,
    Area,
    WidthCap,
    CapExceeded,
    NoninvertibleConstantTerm,
    NonIntegralSeries,
    BadInput,
    NotInImage,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// 1-indexed grid coordinate, (row, col) from the top-left corner.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

struct Rect {
    int rows = 0;
    int cols = 0;
    auto operator<=>(const Rect&) const = default;
    long long area() const { return static_cast<long long>(rows) * cols; }
    bool contains(Cell c) const {
        return c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols;
    }
};

// The four L orientations are named by the corner of their 2x2 bounding box
// that is NOT covered; the anchor is the bounding box's top-left cell.
enum class PlacementKind {
    TrominoNE,
    TrominoNW,
    TrominoSE,
    TrominoSW,
    DominoH,
    DominoV,
    Monomino,
};

enum class Direction { North, South, East, West };

struct Placement {
    PlacementKind kind{};
    Cell anchor{};
    std::optional<Direction> direction;  // arrows on directed dominoes only

    auto operator<=>(const Placement&) const = default;
};

bool is_tromino(PlacementKind k);
int placement_size(PlacementKind k);

/// Cells occupied by a placement, sorted lexicographically. Size 1, 2 or 3.
std::vector<Cell> covered_cells(const Placement& p);

/// Identify the placement whose covered set equals `cells` (sorted, 1-3 cells).
/// Throws Error(BadInput) if the set is not a tromino/domino/monomino shape.
Placement placement_from_cells(const std::vector<Cell>& cells);

/// A rectangle with 0, 1 or 2 distinct missing cells, all inside the rectangle.
class DeficientBoard {
public:
    DeficientBoard() = default;
    DeficientBoard(Rect rect, std::vector<Cell> missing);
    DeficientBoard(int rows, int cols, std::vector<Cell> missing = {});

    const Rect& rect() const { return rect_; }
    const std::vector<Cell>& missing() const { return missing_; }  // sorted
    long long tile_area() const { return rect_.area() - static_cast<long long>(missing_.size()); }
    bool is_missing(Cell c) const;
    bool is_domino_deficient() const;
    bool area_ok() const { return tile_area() % 3 == 0; }

    auto operator<=>(const DeficientBoard&) const = default;

private:
    Rect rect_{1, 1};
    std::vector<Cell> missing_;
};

struct Tiling {
    DeficientBoard board;
    std::vector<Placement> placements;

    auto operator<=>(const Tiling&) const = default;
};

enum class SymmetryOp { Identity, FlipH, FlipV, Rot180, Transpose };

Cell apply_symmetry(Cell c, SymmetryOp s, Rect frame);
Direction apply_symmetry(Direction d, SymmetryOp s);
DeficientBoard apply_symmetry(const DeficientBoard& b, SymmetryOp s);
Placement apply_symmetry(const Placement& p, SymmetryOp s, Rect frame);
Tiling apply_symmetry(const Tiling& t, SymmetryOp s);

enum class HSide { Left, Right };
enum class VSide { Top, Bottom };

/// Detach the leftmost (rightmost) k columns and reattach them on the other
/// side: missing cells move by -k (+k) columns. Throws ShiftThroughDeficiency
/// if a missing cell sits in the detached columns.
DeficientBoard hquad_shift(const DeficientBoard& b, int k, HSide side);
DeficientBoard vquad_shift(const DeficientBoard& b, int k, VSide side);

enum class ViolationKind { Overlap, OutOfBounds, Uncovered, CoversMissing };

struct ValidationReport {
    bool ok = true;
    std::optional<ViolationKind> violation;
    std::optional<Cell> cell;
};

/// ok iff the placements exactly partition rect minus missing.
ValidationReport validate_tiling(const Tiling& t);

std::string to_string(PlacementKind k);
std::string to_string(Direction d);
std::string to_string(SymmetryOp s);
PlacementKind placement_kind_from_string(const std::string& s);
Direction direction_from_string(const std::string& s);

}  // namespace tromino

#endif
