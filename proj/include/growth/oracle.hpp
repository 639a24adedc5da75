#pragma once

#include <optional>
#include <span>
#include <vector>

#include "growth/geometry.hpp"
#include "growth/ops.hpp"

namespace growth {

enum class OpFamily { Full, RcSingle, NodePreserving, NodeBreaking };

struct ReachQuery {
    Shape start;
    Shape target;
    OpFamily family = OpFamily::RcSingle;
    std::size_t max_states = 200000;  // distinct shapes visited
    std::size_t max_steps = 64;       // BFS depth
};

enum class ReachStatus { Yes, No, BudgetExceeded };

struct ReachResult {
    ReachStatus status = ReachStatus::No;
    std::optional<Constructor> witness;  // present when status == Yes
    std::optional<int> steps;            // BFS depth of the witness
};

// Breadth-first search over shapes (canonicalized up to translation) under
// all legal single operations of the family. Sound "no" by monotone growth:
// shapes larger than the target are never expanded.
ReachResult reachable(const ReachQuery& q);

// Shortest witness length; nullopt when not reached within budget.
std::optional<int> min_steps(const ReachQuery& q);

// All legal ops of the family on s, paired with their results. For the
// breaking family, break subsets are enumerated exhaustively only when
// |s| <= 8; larger shapes use the no-break / all-break extremes.
std::vector<std::pair<GrowthOp, Shape>> expand_family(const Shape& s, OpFamily f);

// Applies the steps in order; validates legality, connectivity and strict
// size growth per step. trace[0] is the initial shape. Throws ReplayError
// citing the failing step.
std::vector<Shape> replay(const Shape& initial, std::span<const GrowthOp> steps);
std::vector<Shape> replay(const Constructor& c);

// Exact minimum rectangle-partition cardinality by exhaustive search with
// memoization; |s| <= 25.
int brute_min_partition(const Shape& s);

}  // namespace growth
