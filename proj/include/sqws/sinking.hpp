#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqws/board.hpp"
#include "sqws/rational.hpp"
#include "sqws/rng.hpp"

namespace sqws {

// Distribution of the number of missed shots spent sinking a ship after its
// first hit. Probabilities are exact fractions summing to exactly 1.
struct MissDistribution {
    std::vector<Rational> pmf;  // index = miss count
    Rational mean;

    int max_misses() const { return static_cast<int>(pmf.size()) - 1; }
    double probability(int misses) const;
    int sample(Rng& rng) const;  // integer-weight inverse CDF, exact

    Rational total() const;
};

// Canonical finishing policy. After the first hit, the on-board orthogonal
// neighbors are shot in uniformly random order until a second hit fixes the
// ship's line; from there the line is extended one cell past the farthest hit
// in the direction of travel, reversing to the other end on a miss or at the
// board edge, until the ship is down. Turns lost = misses (a hit grants
// another shot).
//
// The only randomness is the neighbor order, so `neighbor_order` (a
// permutation of the on-board neighbors of `first_hit`) drives the whole run.
int run_finish_policy(const ShipPlacement& ship, Cell first_hit,
                      std::span<const Cell> neighbor_order);

// On-board orthogonal neighbors of c in fixed (up, left, right, down) order;
// the base order the random permutations are defined over.
std::vector<Cell> finish_neighbor_cells(Cell c);

// Exact miss distribution for the policy on the given placement: full
// enumeration over (uniform first-hit cell) x (all neighbor orders), with
// exact rational weights. Works anywhere on the board, including edges.
MissDistribution exact_finish_distribution(const ShipPlacement& ship);

// The mid-sea table: ship of length L in {2,3,5}, isolated and away from
// edges, uniform first hit. Throws std::invalid_argument for other lengths.
MissDistribution miss_distribution_exact(int length);

// Seeded sampler for the same policy.
class FinishingPolicy {
  public:
    explicit FinishingPolicy(std::uint64_t seed) : rng_(seed) {}

    // One policy run; draws the first-hit cell uniformly along the ship,
    // then a neighbor order. Returns the miss count.
    int finish(const ShipPlacement& ship);
    // Mid-sea convenience for L in {2,3,5}.
    int sample_misses(int length);

  private:
    Rng rng_;
};

// One mid-sea draw from a fresh policy.
int sample_misses(int length, std::uint64_t seed);

// Isolated placement with both line extensions on the board; the setting the
// exact mid-sea table is computed on.
ShipPlacement mid_sea_placement(int length);

}  // namespace sqws
