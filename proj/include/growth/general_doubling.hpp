#pragma once

#include <vector>

#include "growth/geometry.hpp"
#include "growth/ops.hpp"

namespace growth {

// What a node-doubling step did: which cells translated (old positions) and
// which cells were newly generated. Used by the shape-invariant checks.
struct NodeDoublingEffect {
    Shape result;
    Direction dir = Direction::East;
    std::vector<GridPoint> translated;  // old positions of the shifted component
    std::vector<GridPoint> generated;   // cells holding newly generated nodes
};

NodeDoublingEffect apply_node_doubling_effect(const Shape& s, const NodeDoubleOp& op);
Shape apply_node_doubling(const Shape& s, const NodeDoubleOp& op);

Shape apply_pure_growth(const Shape& s, const PureGrowthOp& op);

// Confined parallel doubling inside disjoint footprints; asserts containment.
Shape apply_rect_grow(const Shape& s, const RectGrowOp& op);

// Level-by-level pure growth over a spanning forest of target \ initial,
// each tree rooted at an initial node adjacent to it. Requires the initial
// shape to be a subset of the target; replays to the target exactly.
// At most 4 steps per BFS level.
Constructor bfs_constructor(const Shape& initial, const Shape& target);

// Builds the target's baseline by BFS growth from a singleton, then expands
// it with the RC schedule. Length <= 4|B| + 2(ceil(log2 n) + 1).
Constructor baseline_constructor(const Shape& target);

// Partitions the target into minimum rectangles, roots a spanning tree at a
// maximum-area rectangle, grows the root in place from a singleton, then
// seeds and grows each tree level in parallel, confined to the footprints.
Constructor partition_constructor(const Shape& target);

}  // namespace growth
