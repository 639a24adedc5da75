#pragma once

#include <vector>

#include "growth/geometry.hpp"

namespace growth {

// A shape split into disjoint rectangles covering it exactly, together with
// their adjacency graph and a spanning tree rooted at a maximum-area rect.
struct RectPartition {
    std::vector<Rect> rects;
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
    std::vector<int> parent;                  // tree parent per rect, -1 at root
    int root = 0;

    // Rect indices grouped by tree depth; levels()[0] == {root}.
    std::vector<std::vector<int>> levels() const;
};

// Minimum-cardinality rectangle partition. Cuts along a maximum independent
// set of chords between concave vertices (via maximum bipartite matching),
// then resolves every remaining concave vertex with a vertical cut.
// Supports shapes with enclosed holes.
RectPartition min_partition(const Shape& s);

// Adjacency + BFS spanning tree for externally supplied rectangles.
// Rects must be pairwise disjoint with a connected union.
RectPartition build_adjacency_and_tree(std::vector<Rect> rects);

}  // namespace growth
