#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sqws {

inline constexpr int kBoardSide = 8;
inline constexpr int kBoardCells = kBoardSide * kBoardSide;

// Fleet slot order is fixed everywhere: (5, 3, 3, 2).
inline constexpr std::array<int, 4> kFleetLengths = {5, 3, 3, 2};
inline constexpr int kFleetCellCount = 13;  // 5+3+3+2

// One bit per sea cell, bit index = row*8 + col.
using BoardMask = std::uint64_t;

inline constexpr BoardMask kColA = 0x0101010101010101ULL;  // col 0
inline constexpr BoardMask kColH = 0x8080808080808080ULL;  // col 7

struct Cell {
    int row = 0;
    int col = 0;

    constexpr bool valid() const {
        return row >= 0 && row < kBoardSide && col >= 0 && col < kBoardSide;
    }
    constexpr int index() const { return row * kBoardSide + col; }
    static constexpr Cell from_index(int i) { return {i / kBoardSide, i % kBoardSide}; }

    friend constexpr bool operator==(Cell, Cell) = default;
};

constexpr BoardMask cell_mask(Cell c) { return BoardMask{1} << c.index(); }

enum class Orientation : std::uint8_t { Horizontal = 0, Vertical = 1 };

// Consecutive run of `length` cells starting at `origin` (topmost/leftmost cell).
struct ShipPlacement {
    Cell origin;
    int length = 0;
    Orientation orient = Orientation::Horizontal;

    ShipPlacement() = default;
    // Throws std::invalid_argument if the run leaves the board or the length
    // is not one of the fleet lengths {2,3,5}.
    ShipPlacement(Cell origin, int length, Orientation orient);

    friend constexpr bool operator==(const ShipPlacement&, const ShipPlacement&) = default;
};

// (row, col, orientation) ordering; Horizontal sorts before Vertical.
constexpr bool placement_less(const ShipPlacement& a, const ShipPlacement& b) {
    if (a.origin.row != b.origin.row) return a.origin.row < b.origin.row;
    if (a.origin.col != b.origin.col) return a.origin.col < b.origin.col;
    return a.orient < b.orient;
}

std::vector<Cell> cells_of(const ShipPlacement& p);
BoardMask mask_of(const ShipPlacement& p);

// Expands m by one cell in the four orthogonal directions, clipped at the
// board edge. This is the region a second ship must avoid under the buffered
// placement rule; diagonal contact stays legal.
constexpr BoardMask side_buffer_of(BoardMask m) {
    const BoardMask up = m >> kBoardSide;
    const BoardMask down = m << kBoardSide;
    const BoardMask left = (m & ~kColA) >> 1;
    const BoardMask right = (m & ~kColH) << 1;
    return m | up | down | left | right;
}

// Four ship placements in slot order (5, 3, 3, 2); the two length-3 slots are
// kept in ascending (row, col, orientation) order so equality is multiset
// equality over the exchangeable pair.
struct FleetArrangement {
    std::array<ShipPlacement, 4> ships;

    // Validates slot lengths, canonicalizes the length-3 pair and checks the
    // four ships are pairwise cell-disjoint. Throws std::invalid_argument.
    static FleetArrangement make(const ShipPlacement& len5, const ShipPlacement& len3_a,
                                 const ShipPlacement& len3_b, const ShipPlacement& len2);

    std::array<BoardMask, 4> masks() const;
    BoardMask occupied() const;
    bool buffered_ok() const;  // no two ships orthogonally adjacent

    friend bool operator==(const FleetArrangement&, const FleetArrangement&) = default;
};

struct GameConfig {
    int board_size = kBoardSide;
    std::array<int, 4> ship_lengths = kFleetLengths;
    bool buffered = false;

    static GameConfig standard(bool buffered) { return GameConfig{kBoardSide, kFleetLengths, buffered}; }

    // The v1 game is fixed: 8x8 sea, fleet (5,3,3,2). Throws on anything else.
    void validate() const;

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

// Text forms used in CSV outputs: cell "r,c", placement "L@r,c,H|V".
std::string cell_to_string(Cell c);
std::string placement_to_string(const ShipPlacement& p);

}  // namespace sqws
