#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "growth/geometry.hpp"

namespace growth {

enum class Axis { Column, Row };

enum class RigidityMode { Preserving, Breaking };

// One full-doubling time-step: every node generates a copy in direction dir.
struct FullDoublingOp {
    Direction dir;
    friend bool operator==(const FullDoublingOp&, const FullDoublingOp&) = default;
};

// One RC-doubling time-step: all nodes of the selected lines double in dir.
// Line indices are coordinates in the shape the op is applied to.
struct RcOp {
    Axis axis = Axis::Column;
    Direction dir = Direction::East;
    std::vector<int> indices;  // sorted, unique
    friend bool operator==(const RcOp&, const RcOp&) = default;
};

// An unordered grid edge between two adjacent nodes.
struct GridEdge {
    GridPoint a;
    GridPoint b;
    static GridEdge make(GridPoint p, GridPoint q) { return p < q ? GridEdge{p, q} : GridEdge{q, p}; }
    friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

// A single node doubles in direction dir; in breaking mode the listed bicolor
// edges are removed instead of grown over.
struct NodeDoubleOp {
    GridPoint node;
    Direction dir = Direction::East;
    RigidityMode mode = RigidityMode::Preserving;
    std::vector<GridEdge> breaks;  // sorted, unique; breaking mode only
    friend bool operator==(const NodeDoubleOp&, const NodeDoubleOp&) = default;
};

// Pure growth into empty space: each generator emits one node; no
// translations are induced. Targets must be empty and pairwise distinct.
struct PureGrowthOp {
    std::vector<std::pair<GridPoint, Direction>> generators;  // sorted by point
    friend bool operator==(const PureGrowthOp&, const PureGrowthOp&) = default;
};

// Confined parallel doubling: inside each footprint, the selected lines of
// the sub-shape double in dir; every edge crossing a footprint boundary is
// removed for the step, so nothing outside a footprint moves. The result of
// each lane must stay inside its footprint.
struct RectGrowOp {
    struct Lane {
        Rect footprint;
        std::vector<int> indices;  // line coordinates within the footprint
        friend bool operator==(const Lane&, const Lane&) = default;
    };
    Direction dir = Direction::East;
    std::vector<Lane> lanes;
    friend bool operator==(const RectGrowOp&, const RectGrowOp&) = default;
};

using GrowthOp = std::variant<FullDoublingOp, RcOp, PureGrowthOp, NodeDoubleOp, RectGrowOp>;

// A replayable finite sequence of growth operations; one entry per time-step.
struct Constructor {
    Shape initial;
    std::vector<GrowthOp> steps;
};

}  // namespace growth
