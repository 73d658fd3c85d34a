#include "sqws/sinking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqws {

double MissDistribution::probability(int misses) const {
    if (misses < 0 || misses > max_misses()) return 0.0;
    return pmf[static_cast<std::size_t>(misses)].to_double();
}

Rational MissDistribution::total() const {
    Rational sum;
    for (const Rational& p : pmf) sum += p;
    return sum;
}

int MissDistribution::sample(Rng& rng) const {
    // common denominator = lcm of the parts; weights are exact integers
    std::int64_t denom = 1;
    for (const Rational& p : pmf) denom = std::lcm(denom, p.den);
    std::uint64_t draw = rng.below(static_cast<std::uint64_t>(denom));
    for (std::size_t x = 0; x < pmf.size(); ++x) {
        const std::uint64_t weight =
            static_cast<std::uint64_t>(pmf[x].num * (denom / pmf[x].den));
        if (draw < weight) return static_cast<int>(x);
        draw -= weight;
    }
    throw std::logic_error("miss distribution does not sum to 1");
}

std::vector<Cell> finish_neighbor_cells(Cell c) {
    const Cell candidates[4] = {{c.row - 1, c.col}, {c.row, c.col - 1},
                                {c.row, c.col + 1}, {c.row + 1, c.col}};
    std::vector<Cell> neighbors;
    for (const Cell& nb : candidates)
        if (nb.valid()) neighbors.push_back(nb);
    return neighbors;
}

int run_finish_policy(const ShipPlacement& ship, Cell first_hit,
                      std::span<const Cell> neighbor_order) {
    const BoardMask ship_mask = mask_of(ship);
    if (!(cell_mask(first_hit) & ship_mask))
        throw std::invalid_argument("first hit is not on the ship");

    int misses = 0;
    BoardMask missed = 0;
    Cell second{-1, -1};
    for (const Cell& nb : neighbor_order) {
        if (cell_mask(nb) & ship_mask) { second = nb; break; }
        ++misses;
        missed |= cell_mask(nb);
    }
    if (second.row < 0)
        throw std::invalid_argument("neighbor order never reaches the ship");

    // The hits form a run [lo, hi] along the fixed line; travel direction
    // starts toward the second hit.
    int dr = second.row - first_hit.row;
    int dc = second.col - first_hit.col;
    Cell lo = first_hit, hi = first_hit;
    auto extend_run = [&](Cell hit) {
        if (hit.row + hit.col < lo.row + lo.col) lo = hit;
        if (hit.row + hit.col > hi.row + hi.col) hi = hit;
    };
    extend_run(second);

    int hits = 2;
    for (int guard = 0; hits < ship.length; ++guard) {
        if (guard > 2 * kBoardCells)
            throw std::logic_error("finishing policy failed to terminate");
        const Cell end = (dr + dc > 0) ? hi : lo;
        const Cell target{end.row + dr, end.col + dc};
        if (!target.valid() || (cell_mask(target) & missed)) {
            dr = -dr;  // board edge or known water: turn around, no shot spent
            dc = -dc;
            continue;
        }
        if (cell_mask(target) & ship_mask) {
            ++hits;
            extend_run(target);
        } else {
            ++misses;
            missed |= cell_mask(target);
            dr = -dr;
            dc = -dc;
        }
    }
    return misses;
}

MissDistribution exact_finish_distribution(const ShipPlacement& ship) {
    std::vector<Rational> pmf;
    const std::vector<Cell> ship_cells = cells_of(ship);
    for (const Cell& first_hit : ship_cells) {
        std::vector<Cell> neighbors = finish_neighbor_cells(first_hit);
        std::sort(neighbors.begin(), neighbors.end(),
                  [](Cell a, Cell b) { return a.index() < b.index(); });
        std::int64_t orders = 1;
        for (std::size_t i = 2; i <= neighbors.size(); ++i) orders *= static_cast<std::int64_t>(i);
        const Rational weight{1, static_cast<std::int64_t>(ship.length) * orders};
        do {
            const int misses = run_finish_policy(ship, first_hit, neighbors);
            if (misses >= static_cast<int>(pmf.size())) pmf.resize(misses + 1);
            pmf[static_cast<std::size_t>(misses)] += weight;
        } while (std::next_permutation(neighbors.begin(), neighbors.end(),
                                       [](Cell a, Cell b) { return a.index() < b.index(); }));
    }
    MissDistribution dist;
    dist.pmf = std::move(pmf);
    for (std::size_t x = 0; x < dist.pmf.size(); ++x)
        dist.mean += dist.pmf[x] * Rational{static_cast<std::int64_t>(x)};
    if (!(dist.total() == Rational{1}))
        throw std::logic_error("finish distribution weights do not sum to 1");
    return dist;
}

ShipPlacement mid_sea_placement(int length) {
    if (length != 2 && length != 3 && length != 5)
        throw std::invalid_argument("fleet ships have length 2, 3 or 5");
    // horizontal on row 4, centered enough that both line extensions and all
    // neighbor probes stay on the board
    return ShipPlacement{Cell{4, (kBoardSide - length) / 2}, length, Orientation::Horizontal};
}

MissDistribution miss_distribution_exact(int length) {
    return exact_finish_distribution(mid_sea_placement(length));
}

int FinishingPolicy::finish(const ShipPlacement& ship) {
    const std::vector<Cell> ship_cells = cells_of(ship);
    const Cell first_hit = ship_cells[static_cast<std::size_t>(rng_.below(ship_cells.size()))];
    std::vector<Cell> neighbors = finish_neighbor_cells(first_hit);
    rng_.shuffle(std::span<Cell>{neighbors});
    return run_finish_policy(ship, first_hit, neighbors);
}

int FinishingPolicy::sample_misses(int length) { return finish(mid_sea_placement(length)); }

int sample_misses(int length, std::uint64_t seed) {
    FinishingPolicy policy(seed);
    return policy.sample_misses(length);
}

}  // namespace sqws
