#pragma once

#include <vector>

#include "growth/geometry.hpp"

namespace growth {

// A shape factored into its baseline (every column and row occurring once)
// plus the run lengths of consecutive identical columns and rows.
struct BaselineProfile {
    Shape baseline;             // normalized, all multiplicities 1
    std::vector<int> col_mult;  // west -> east, one entry per baseline column
    std::vector<int> row_mult;  // south -> north, one entry per baseline row

    // Re-expands the profile; equals normalize of the profiled shape.
    Shape expand() const;

    friend bool operator==(const BaselineProfile&, const BaselineProfile&) = default;
};

// Removes consecutive duplicate columns, then rows. Two adjacent columns are
// identical iff their y-coordinate sets are equal (rows: x-coordinate sets).
// Linear in the number of nodes.
BaselineProfile baseline(const Shape& s);

}  // namespace growth
