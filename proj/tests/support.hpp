#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "growth/baseline.hpp"
#include "growth/geometry.hpp"

namespace testutil {

using growth::GridPoint;
using growth::Shape;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random connected shape of exactly n cells (random aggregation).
inline Shape random_shape(Rng& rng, int n) {
    std::vector<GridPoint> pts{{0, 0}};
    std::unordered_set<GridPoint, growth::PointHash> used{{0, 0}};
    while (static_cast<int>(pts.size()) < n) {
        const GridPoint& base = pts[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(pts.size()) - 1))];
        const GridPoint cand = base + unit(growth::kAllDirections[rand_int(rng, 0, 3)]);
        if (used.insert(cand).second) pts.push_back(cand);
    }
    std::sort(pts.begin(), pts.end());
    return growth::normalize(Shape::unchecked(std::move(pts)));
}

// Random connected sub-shape of s with m cells, grown from a random cell.
inline Shape random_subshape(Rng& rng, const Shape& s, int m) {
    const auto& pts = s.points();
    std::vector<GridPoint> chosen;
    std::unordered_set<GridPoint, growth::PointHash> in;
    chosen.push_back(pts[static_cast<std::size_t>(rand_int(rng, 0, s.size() - 1))]);
    in.insert(chosen.front());
    while (static_cast<int>(chosen.size()) < m) {
        // pick a random chosen cell with an unused neighbor inside s
        std::vector<GridPoint> frontier;
        for (const auto& p : chosen)
            for (growth::Direction d : growth::kAllDirections) {
                const GridPoint q = p + unit(d);
                if (s.contains(q) && !in.count(q)) frontier.push_back(q);
            }
        if (frontier.empty()) break;
        const GridPoint pick =
            frontier[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(frontier.size()) - 1))];
        in.insert(pick);
        chosen.push_back(pick);
    }
    std::sort(chosen.begin(), chosen.end());
    return Shape::unchecked(std::move(chosen));
}

// Random profile-generated shape: a baseline with random multiplicities.
// Returns the expanded shape; via `mults_out` the profile is observable.
inline Shape random_profiled_shape(Rng& rng, int base_cells, int max_mult) {
    Shape base = growth::baseline(random_shape(rng, base_cells)).baseline;
    std::vector<int> cols(static_cast<std::size_t>(base.width()));
    std::vector<int> rows(static_cast<std::size_t>(base.height()));
    for (auto& m : cols) m = rand_int(rng, 1, max_mult);
    for (auto& m : rows) m = rand_int(rng, 1, max_mult);
    return growth::BaselineProfile{std::move(base), std::move(cols), std::move(rows)}.expand();
}

// Exact staircase of n cells (n even): steps of two nodes going north-east.
inline Shape exact_staircase(int n) {
    std::vector<GridPoint> pts;
    int x = 0, y = 0;
    pts.push_back({x, y});
    for (int i = 1; i < n; ++i) {
        if (i % 2 == 1)
            ++x;  // east
        else
            ++y;  // north, forming two-node steps
        pts.push_back({x, y});
    }
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

// All connected shapes of exactly n cells, up to translation.
std::vector<Shape> enumerate_connected(int n);

// Buckets of all connected shapes per size 1..n, up to translation.
std::vector<std::vector<Shape>> enumerate_connected_upto(int n);

// Independent baseline oracle: merges adjacent identical lines (either axis)
// one pair at a time in random order, tracking merged run weights.
growth::BaselineProfile random_order_baseline(const Shape& s, Rng& rng);

}  // namespace testutil
