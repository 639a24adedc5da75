#pragma once

#include <optional>

#include "growth/geometry.hpp"
#include "growth/ops.hpp"

namespace growth {

// Totals of horizontal and vertical full doubling operations.
struct FullDoublingCounts {
    int horizontal = 0;
    int vertical = 0;
    friend bool operator==(const FullDoublingCounts&, const FullDoublingCounts&) = default;
};

// One full doubling time-step: every column (row) is translated by the count
// of occupied columns (rows) on the near side and generates its copy one
// further on. Doubles the node count.
Shape apply_full_doubling(const Shape& s, Direction d);

// Closed form for a sequence of `horizontal` east and `vertical` north full
// doublings: each node u maps to u' offset by (2^l-1)*west_offset and
// (2^k-1)*south_offset, then blown up to a 2^l x 2^k rectangle.
Shape reconfigure(const Shape& s, FullDoublingCounts c);

// Finds (l, k) with reconfigure(from, (l,k)) equal to `to` up to translation,
// smallest l first. Absent if no counts work.
std::optional<FullDoublingCounts> reach_full_doubling(const Shape& from, const Shape& to);

}  // namespace growth
