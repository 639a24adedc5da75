#include "growth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "growth/full_doubling.hpp"
#include "growth/general_doubling.hpp"
#include "growth/rc_doubling.hpp"

namespace growth {

namespace {

std::vector<int> occupied_lines(const Shape& s, Axis axis) {
    std::set<int> vals;
    for (const auto& p : s.points()) vals.insert(axis == Axis::Column ? p.x : p.y);
    return {vals.begin(), vals.end()};
}

// Bicolor edges of a prospective doubling, excluding the uv edge itself.
std::vector<GridEdge> breakable_edges(const Shape& s, GridPoint node, Direction dir) {
    const NodeDoubleOp probe{node, dir, RigidityMode::Preserving, {}};
    const NodeDoublingEffect eff = apply_node_doubling_effect(s, probe);
    std::vector<GridEdge> out;
    const GridPoint uv_cell = node + unit(dir);
    for (const auto& g : eff.generated) {
        if (g == uv_cell) continue;
        out.push_back(GridEdge::make(g - unit(dir), g));
    }
    return out;
}

}  // namespace

std::vector<std::pair<GrowthOp, Shape>> expand_family(const Shape& s, OpFamily f) {
    std::vector<std::pair<GrowthOp, Shape>> out;
    switch (f) {
        case OpFamily::Full: {
            for (Direction d : kAllDirections)
                out.push_back({FullDoublingOp{d}, apply_full_doubling(s, d)});
            break;
        }
        case OpFamily::RcSingle: {
            for (Axis axis : {Axis::Column, Axis::Row}) {
                const auto dirs = axis == Axis::Column
                                      ? std::pair{Direction::East, Direction::West}
                                      : std::pair{Direction::North, Direction::South};
                for (int idx : occupied_lines(s, axis)) {
                    for (Direction d : {dirs.first, dirs.second}) {
                        RcOp op{axis, d, {idx}};
                        out.push_back({op, apply_rc(s, op)});
                    }
                }
            }
            break;
        }
        case OpFamily::NodePreserving: {
            for (const auto& p : s.points())
                for (Direction d : kAllDirections) {
                    NodeDoubleOp op{p, d, RigidityMode::Preserving, {}};
                    out.push_back({op, apply_node_doubling(s, op)});
                }
            break;
        }
        case OpFamily::NodeBreaking: {
            for (const auto& p : s.points())
                for (Direction d : kAllDirections) {
                    const std::vector<GridEdge> edges = breakable_edges(s, p, d);
                    if (s.size() <= 8 && edges.size() <= 16) {
                        const std::size_t subsets = std::size_t{1} << edges.size();
                        for (std::size_t mask = 0; mask < subsets; ++mask) {
                            std::vector<GridEdge> breaks;
                            for (std::size_t i = 0; i < edges.size(); ++i)
                                if (mask & (std::size_t{1} << i)) breaks.push_back(edges[i]);
                            NodeDoubleOp op{p, d, RigidityMode::Breaking, std::move(breaks)};
                            out.push_back({op, apply_node_doubling(s, op)});
                        }
                    } else {
                        NodeDoubleOp none{p, d, RigidityMode::Breaking, {}};
                        out.push_back({none, apply_node_doubling(s, none)});
                        if (!edges.empty()) {
                            NodeDoubleOp all{p, d, RigidityMode::Breaking, edges};
                            out.push_back({all, apply_node_doubling(s, all)});
                        }
                    }
                }
            break;
        }
    }
    return out;
}

ReachResult reachable(const ReachQuery& q) {
    if (q.target.size() < q.start.size()) return {ReachStatus::No, std::nullopt, std::nullopt};

    struct State {
        Shape shape;
        int parent;
        GrowthOp op;
        int depth;
    };

    const Shape target_c = normalize(q.target);
    std::vector<State> states;
    states.push_back({q.start, -1, FullDoublingOp{Direction::East}, 0});

    std::unordered_set<Shape, ShapeHash> visited;
    visited.insert(normalize(q.start));

    auto make_witness = [&](int idx) {
        std::vector<GrowthOp> steps;
        for (int i = idx; states[static_cast<std::size_t>(i)].parent >= 0;
             i = states[static_cast<std::size_t>(i)].parent)
            steps.push_back(states[static_cast<std::size_t>(i)].op);
        std::reverse(steps.begin(), steps.end());
        return Constructor{q.start, std::move(steps)};
    };

    if (normalize(q.start) == target_c) {
        ReachResult r{ReachStatus::Yes, make_witness(0), 0};
        return r;
    }

    std::queue<int> frontier;
    frontier.push(0);
    bool truncated = false;
    while (!frontier.empty()) {
        const int id = frontier.front();
        frontier.pop();
        const int depth = states[static_cast<std::size_t>(id)].depth;
        if (static_cast<std::size_t>(depth) >= q.max_steps) {
            truncated = true;
            continue;
        }
        const Shape here = states[static_cast<std::size_t>(id)].shape;
        for (auto& [op, result] : expand_family(here, q.family)) {
            if (result.size() > q.target.size()) continue;
            Shape canon = normalize(result);
            if (!visited.insert(canon).second) continue;
            states.push_back({std::move(result), id, std::move(op), depth + 1});
            if (canon == target_c)
                return {ReachStatus::Yes, make_witness(static_cast<int>(states.size()) - 1),
                        depth + 1};
            if (visited.size() > q.max_states)
                return {ReachStatus::BudgetExceeded, std::nullopt, std::nullopt};
            frontier.push(static_cast<int>(states.size()) - 1);
        }
    }
    if (truncated) return {ReachStatus::BudgetExceeded, std::nullopt, std::nullopt};
    return {ReachStatus::No, std::nullopt, std::nullopt};
}

std::optional<int> min_steps(const ReachQuery& q) {
    const ReachResult r = reachable(q);
    if (r.status != ReachStatus::Yes) return std::nullopt;
    return r.steps;
}

namespace {

struct ReplayVisitor {
    const Shape& shape;
    Shape operator()(const FullDoublingOp& op) const { return apply_full_doubling(shape, op.dir); }
    Shape operator()(const RcOp& op) const { return apply_rc(shape, op); }
    Shape operator()(const PureGrowthOp& op) const { return apply_pure_growth(shape, op); }
    Shape operator()(const NodeDoubleOp& op) const { return apply_node_doubling(shape, op); }
    Shape operator()(const RectGrowOp& op) const { return apply_rect_grow(shape, op); }
};

}  // namespace

std::vector<Shape> replay(const Shape& initial, std::span<const GrowthOp> steps) {
    std::vector<Shape> trace;
    trace.reserve(steps.size() + 1);
    trace.push_back(initial);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        Shape next = [&] {
            try {
                return std::visit(ReplayVisitor{trace.back()}, steps[i]);
            } catch (const std::exception& e) {
                throw ReplayError(i, e.what());
            }
        }();
        if (next.size() <= trace.back().size())
            throw ReplayError(i, "step did not grow the shape");
        if (!is_connected(next.points()))
            throw ReplayError(i, "step disconnected the shape");
        trace.push_back(std::move(next));
    }
    return trace;
}

std::vector<Shape> replay(const Constructor& c) { return replay(c.initial, c.steps); }

int brute_min_partition(const Shape& s) {
    if (s.size() > 25) throw OpError("brute_min_partition: shape exceeds the 25-cell budget");
    const auto& cells = s.points();
    std::unordered_map<GridPoint, int, PointHash> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);

    using Mask = std::uint32_t;
    const Mask full = (cells.size() == 32) ? ~Mask{0} : ((Mask{1} << cells.size()) - 1);
    std::unordered_map<Mask, int> memo;

    auto bit_at = [&](GridPoint p) -> int {
        auto it = index.find(p);
        return it == index.end() ? -1 : it->second;
    };

    // Every partition assigns the lowest remaining cell to some rectangle;
    // trying all rectangles over that cell is exhaustive.
    auto solve = [&](auto&& self, Mask mask) -> int {
        if (mask == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        const int first = std::countr_zero(mask);
        const GridPoint c = cells[static_cast<std::size_t>(first)];

        int best = INT32_MAX;
        int width_limit = INT32_MAX;
        std::vector<Mask> acc;  // acc[w-1]: rect of width w up to the current row
        for (int h = 0;; ++h) {
            std::vector<Mask> prefixes;
            Mask pre = 0;
            int w = 0;
            while (w < width_limit) {
                const int b = bit_at({c.x + w, c.y + h});
                if (b < 0 || !(mask >> b & 1)) break;
                pre |= Mask{1} << b;
                prefixes.push_back(pre);
                ++w;
            }
            if (w == 0) break;
            width_limit = w;
            if (h == 0) {
                acc = std::move(prefixes);
            } else {
                acc.resize(static_cast<std::size_t>(w));
                for (int i = 0; i < w; ++i)
                    acc[static_cast<std::size_t>(i)] |= prefixes[static_cast<std::size_t>(i)];
            }
            for (int i = 0; i < w; ++i)
                best = std::min(best, 1 + self(self, mask & ~acc[static_cast<std::size_t>(i)]));
        }
        memo[mask] = best;
        return best;
    };

    return solve(solve, full);
}

}  // namespace growth
