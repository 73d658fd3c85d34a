#include "sqws/board.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqws {

ShipPlacement::ShipPlacement(Cell origin_, int length_, Orientation orient_)
    : origin(origin_), length(length_), orient(orient_) {
    if (!origin.valid())
        throw std::invalid_argument("ship origin off board");
    if (length != 2 && length != 3 && length != 5)
        throw std::invalid_argument("ship length must be 2, 3 or 5");
    const bool fits = orient == Orientation::Horizontal ? origin.col + length <= kBoardSide
                                                        : origin.row + length <= kBoardSide;
    if (!fits)
        throw std::invalid_argument("ship run leaves the board");
}

std::vector<Cell> cells_of(const ShipPlacement& p) {
    std::vector<Cell> cells;
    cells.reserve(p.length);
    for (int i = 0; i < p.length; ++i) {
        cells.push_back(p.orient == Orientation::Horizontal
                            ? Cell{p.origin.row, p.origin.col + i}
                            : Cell{p.origin.row + i, p.origin.col});
    }
    return cells;
}

BoardMask mask_of(const ShipPlacement& p) {
    // step 1 along a row, 8 down a column
    const int step = p.orient == Orientation::Horizontal ? 1 : kBoardSide;
    BoardMask m = 0;
    for (int i = 0; i < p.length; ++i) m |= cell_mask(p.origin) << (i * step);
    return m;
}

FleetArrangement FleetArrangement::make(const ShipPlacement& len5, const ShipPlacement& len3_a,
                                        const ShipPlacement& len3_b, const ShipPlacement& len2) {
    if (len5.length != 5 || len3_a.length != 3 || len3_b.length != 3 || len2.length != 2)
        throw std::invalid_argument("fleet slots must have lengths (5,3,3,2)");
    FleetArrangement fleet{{len5, len3_a, len3_b, len2}};
    if (placement_less(fleet.ships[2], fleet.ships[1]))
        std::swap(fleet.ships[1], fleet.ships[2]);
    BoardMask seen = 0;
    for (const ShipPlacement& p : fleet.ships) {
        const BoardMask m = mask_of(p);
        if (m & seen) throw std::invalid_argument("ships overlap");
        seen |= m;
    }
    return fleet;
}

std::array<BoardMask, 4> FleetArrangement::masks() const {
    return {mask_of(ships[0]), mask_of(ships[1]), mask_of(ships[2]), mask_of(ships[3])};
}

BoardMask FleetArrangement::occupied() const {
    const auto m = masks();
    return m[0] | m[1] | m[2] | m[3];
}

bool FleetArrangement::buffered_ok() const {
    const auto m = masks();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (side_buffer_of(m[i]) & m[j]) return false;
    return true;
}

void GameConfig::validate() const {
    if (board_size != kBoardSide || ship_lengths != kFleetLengths)
        throw std::invalid_argument("unsupported game config: expected 8x8 sea with fleet (5,3,3,2)");
}

std::string cell_to_string(Cell c) {
    return std::to_string(c.row) + "," + std::to_string(c.col);
}

std::string placement_to_string(const ShipPlacement& p) {
    return std::to_string(p.length) + "@" + cell_to_string(p.origin) + "," +
           (p.orient == Orientation::Horizontal ? "H" : "V");
}

}  // namespace sqws
