#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "sqws/board.hpp"

namespace sqws {

// 8 * (9-L) * 2: rows x start offsets x orientations. L in {2,3,5}.
int count_single_ship_placements(int length);

// Every placement of one ship length in (row, col, orientation) order. The
// position of a placement in this list is its canonical index.
const std::vector<ShipPlacement>& placements_of_length(int length);

// One byte per ship: row | col<<3 | orientation<<6 (bit 7 clear).
std::uint8_t encode_placement(const ShipPlacement& p);
ShipPlacement decode_placement(std::uint8_t byte, int length);

// Four placement bytes, LSB to MSB = fleet slots (5, 3a, 3b, 2).
using PackedArrangement = std::uint32_t;

PackedArrangement pack_arrangement(const FleetArrangement& fleet);
FleetArrangement unpack_arrangement(PackedArrangement record);
std::array<BoardMask, 4> unpack_masks(PackedArrangement record);

// Raised when an arrangement consumer refuses a record mid-walk.
struct EnumerationAborted : std::runtime_error {
    std::uint64_t visited;
    explicit EnumerationAborted(std::uint64_t visited_)
        : std::runtime_error("enumeration aborted by consumer after " +
                             std::to_string(visited_) + " arrangements"),
          visited(visited_) {}
};

// The full legal-arrangement list for one config, held as packed records in
// enumeration order.
class ArrangementSet {
  public:
    ArrangementSet(GameConfig config, std::vector<PackedArrangement> records)
        : config_(config), records_(std::move(records)) {}

    const GameConfig& config() const { return config_; }
    std::uint64_t size() const { return records_.size(); }
    PackedArrangement record(std::uint64_t i) const { return records_[i]; }
    FleetArrangement arrangement(std::uint64_t i) const { return unpack_arrangement(records_[i]); }
    const std::vector<PackedArrangement>& records() const { return records_; }

  private:
    GameConfig config_;
    std::vector<PackedArrangement> records_;
};

// Return false from the sink to abort the walk (throws EnumerationAborted).
using ArrangementSink = std::function<bool(PackedArrangement)>;

// Visits every legal fleet arrangement exactly once, in the deterministic
// nested-loop order (L=5 placements, then L=2, then ordered pairs of the two
// L=3 placements), pruning by occupied/buffered masks. The two length-3 slots
// range over ordered pairs, matching the published counts. The sink, when
// given, sees records in that canonical order regardless of thread count.
ArrangementSet enumerate_arrangements(const GameConfig& config,
                                      const ArrangementSink& sink = {}, int threads = 1);

namespace detail {
// Reference-grade enumerator over arbitrary small boards/fleets (side <= 8),
// used to cross-check the production engine. Length classes are visited in
// ascending unit size (ordered tuples within a class); the sink receives
// per-slot placement indices in the original `lengths` order.
std::uint64_t enumerate_generic(int board_side, std::span<const int> lengths, bool buffered,
                                const std::function<bool(std::span<const int>)>& sink);
}  // namespace detail

enum class OccupancyScope { AllShips, Length5, Length3, Length2 };

// Per-cell probability that a scope ship covers the cell, as exact counts
// over the arrangement total. The two length-3 ships are reported jointly.
struct OccupancyMap {
    OccupancyScope scope = OccupancyScope::AllShips;
    bool buffered = false;
    std::uint64_t total = 0;
    std::array<std::uint64_t, kBoardCells> cell_counts{};

    std::uint64_t count_at(int row, int col) const { return cell_counts[row * kBoardSide + col]; }
    double probability(int row, int col) const {
        return static_cast<double>(count_at(row, col)) / static_cast<double>(total);
    }
    double sum() const;
};

OccupancyMap occupancy_map(const ArrangementSet& set, OccupancyScope scope);

// 8 rows x 8 comma-separated probabilities, 12 significant digits.
void write_occupancy_csv(const OccupancyMap& map, std::ostream& out);
// ASCII PGM (P2), map maximum scaled to 255.
void write_occupancy_pgm(const OccupancyMap& map, std::ostream& out);

}  // namespace sqws
