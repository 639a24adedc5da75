#include "growth/general_doubling.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "growth/baseline.hpp"
#include "growth/rc_doubling.hpp"
#include "growth/rect_partition.hpp"

namespace growth {

namespace {

using PointSet = std::unordered_set<GridPoint, PointHash>;

// Coordinate maps turning any doubling direction into the east case.
GridPoint to_east(Direction d, GridPoint p) {
    switch (d) {
        case Direction::East: return p;
        case Direction::West: return {-p.x, p.y};
        case Direction::North: return {p.y, p.x};
        case Direction::South: return {-p.y, p.x};
    }
    return p;
}

GridPoint from_east(Direction d, GridPoint p) {
    switch (d) {
        case Direction::East: return p;
        case Direction::West: return {-p.x, p.y};
        case Direction::North: return {p.y, p.x};
        case Direction::South: return {p.y, -p.x};
    }
    return p;
}

// Connected component of `seed` within `cells`, optionally clipped to x <= max_x.
PointSet component_of(const PointSet& cells, GridPoint seed, bool clip, int max_x) {
    PointSet comp;
    if (!cells.count(seed)) return comp;
    std::queue<GridPoint> q;
    q.push(seed);
    comp.insert(seed);
    while (!q.empty()) {
        GridPoint p = q.front();
        q.pop();
        for (Direction d : kAllDirections) {
            GridPoint n = p + unit(d);
            if (clip && n.x > max_x) continue;
            if (cells.count(n) && !comp.count(n)) {
                comp.insert(n);
                q.push(n);
            }
        }
    }
    return comp;
}

}  // namespace

NodeDoublingEffect apply_node_doubling_effect(const Shape& s, const NodeDoubleOp& op) {
    if (!s.contains(op.node)) throw OpError("node doubling: node not in shape");

    // Work in transformed coordinates where the direction is east.
    PointSet cells;
    for (const auto& p : s.points()) cells.insert(to_east(op.dir, p));
    const GridPoint u = to_east(op.dir, op.node);
    const GridPoint v = u + GridPoint{1, 0};

    std::vector<GridEdge> breaks;
    breaks.reserve(op.breaks.size());
    for (const auto& e : op.breaks)
        breaks.push_back(GridEdge::make(to_east(op.dir, e.a), to_east(op.dir, e.b)));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (op.mode == RigidityMode::Preserving && !breaks.empty())
        throw OpError("node doubling: breaks given in preserving mode");

    NodeDoublingEffect eff{s, op.dir, {}, {}};

    if (!cells.count(v)) {
        // Growth into empty space.
        if (!breaks.empty()) throw OpError("node doubling: break of a non-bicolor edge");
        std::vector<GridPoint> pts = s.points();
        pts.push_back(from_east(op.dir, v));
        std::sort(pts.begin(), pts.end());
        eff.result = Shape::unchecked(std::move(pts));
        eff.generated.push_back(from_east(op.dir, v));
        return eff;
    }

    const int j = u.x;
    // Stationary side: nodes reachable from u without entering column j+1.
    const PointSet side_u = component_of(cells, u, /*clip=*/true, j);
    // Translating side: nodes reachable from v avoiding the stationary side.
    PointSet rest = cells;
    for (const auto& p : side_u) rest.erase(p);
    const PointSet side_v = component_of(rest, v, /*clip=*/false, 0);

    // Every edge leaving side_v crosses the (C_j, C_{j+1}) cut into side_u.
    std::vector<GridEdge> bicolor;
    for (const auto& p : side_v) {
        if (p.x != j + 1) continue;
        const GridPoint w{j, p.y};
        if (side_u.count(w)) bicolor.push_back(GridEdge::make(w, p));
    }
    std::sort(bicolor.begin(), bicolor.end());
    const GridEdge uv = GridEdge::make(u, v);

    std::vector<GridEdge> grown;
    if (op.mode == RigidityMode::Preserving) {
        grown = bicolor;
    } else {
        for (const auto& e : breaks) {
            if (e == uv) throw OpError("node doubling: the doubling edge cannot break");
            if (!std::binary_search(bicolor.begin(), bicolor.end(), e))
                throw OpError("node doubling: break of a non-bicolor edge");
        }
        for (const auto& e : bicolor)
            if (!std::binary_search(breaks.begin(), breaks.end(), e)) grown.push_back(e);
    }

    std::vector<GridPoint> pts;
    pts.reserve(cells.size() + grown.size());
    for (const auto& p : cells)
        if (!side_v.count(p)) pts.push_back(from_east(op.dir, p));
    for (const auto& p : side_v) {
        pts.push_back(from_east(op.dir, p + GridPoint{1, 0}));
        eff.translated.push_back(from_east(op.dir, p));
    }
    for (const auto& e : grown) {
        pts.push_back(from_east(op.dir, e.b));  // east endpoint's vacated cell
        eff.generated.push_back(from_east(op.dir, e.b));
    }
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw ModelError("node doubling: two nodes mapped to one cell");
    if (!is_connected(pts)) throw ModelError("node doubling: result disconnected");

    eff.result = Shape::unchecked(std::move(pts));
    std::sort(eff.translated.begin(), eff.translated.end());
    std::sort(eff.generated.begin(), eff.generated.end());
    return eff;
}

Shape apply_node_doubling(const Shape& s, const NodeDoubleOp& op) {
    return apply_node_doubling_effect(s, op).result;
}

Shape apply_pure_growth(const Shape& s, const PureGrowthOp& op) {
    if (op.generators.empty()) throw OpError("pure growth: no generators");
    std::vector<GridPoint> gens;
    std::vector<GridPoint> targets;
    for (const auto& [g, d] : op.generators) {
        if (!s.contains(g)) throw OpError("pure growth: generator not in shape");
        const GridPoint t = g + unit(d);
        if (s.contains(t)) throw OpError("pure growth: target cell occupied");
        gens.push_back(g);
        targets.push_back(t);
    }
    std::sort(gens.begin(), gens.end());
    if (std::adjacent_find(gens.begin(), gens.end()) != gens.end())
        throw OpError("pure growth: a node can generate at most once per step");
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
        throw OpError("pure growth: duplicate target cell");

    std::vector<GridPoint> pts = s.points();
    pts.insert(pts.end(), targets.begin(), targets.end());
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

Shape apply_rect_grow(const Shape& s, const RectGrowOp& op) {
    if (op.lanes.empty()) throw OpError("rect grow: no lanes");
    for (std::size_t i = 0; i < op.lanes.size(); ++i)
        for (std::size_t k = i + 1; k < op.lanes.size(); ++k) {
            const Rect& a = op.lanes[i].footprint;
            const Rect& b = op.lanes[k].footprint;
            const bool apart = a.east_x() < b.origin.x || b.east_x() < a.origin.x ||
                               a.north_y() < b.origin.y || b.north_y() < a.origin.y;
            if (!apart) throw OpError("rect grow: overlapping footprints");
        }

    const Axis axis = is_horizontal(op.dir) ? Axis::Column : Axis::Row;
    std::vector<GridPoint> pts;
    pts.reserve(s.points().size() * 2);
    std::size_t grown_total = 0;
    for (const auto& p : s.points()) {
        bool inside = false;
        for (const auto& lane : op.lanes)
            if (lane.footprint.contains(p)) {
                inside = true;
                break;
            }
        if (!inside) pts.push_back(p);
    }
    for (const auto& lane : op.lanes) {
        std::vector<GridPoint> local;
        for (const auto& p : s.points())
            if (lane.footprint.contains(p)) local.push_back(p);
        if (local.empty()) throw OpError("rect grow: empty footprint");
        if (!is_connected(local)) throw OpError("rect grow: footprint contents disconnected");
        const Shape sub = Shape::unchecked(std::move(local));
        const Shape grown = apply_rc(sub, RcOp{axis, op.dir, lane.indices});
        for (const auto& p : grown.points()) {
            if (!lane.footprint.contains(p))
                throw OpError("rect grow: growth escapes footprint");
            pts.push_back(p);
        }
        grown_total += static_cast<std::size_t>(grown.size() - sub.size());
    }
    if (grown_total == 0) throw OpError("rect grow: no growth");
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw ModelError("rect grow: two nodes mapped to one cell");
    if (!is_connected(pts)) throw OpError("rect grow: result disconnected");
    return Shape::unchecked(std::move(pts));
}

namespace {

// Deterministic neighbor order for tree building.
constexpr Direction kBfsOrder[] = {Direction::North, Direction::East, Direction::South,
                                   Direction::West};

struct TreeEdge {
    GridPoint parent;
    GridPoint child;
};

}  // namespace

Constructor bfs_constructor(const Shape& initial, const Shape& target) {
    for (const auto& p : initial.points())
        if (!target.contains(p))
            throw OpError("bfs constructor: initial shape is not a subset of the target");

    PointSet remaining;
    for (const auto& p : target.points()) remaining.insert(p);
    for (const auto& p : initial.points()) remaining.erase(p);

    Constructor out{initial, {}};
    if (remaining.empty()) return out;

    // Levels of tree edges across all components; level 1 holds the seeds.
    std::vector<std::vector<TreeEdge>> levels;
    PointSet assigned;

    std::vector<GridPoint> diff(remaining.begin(), remaining.end());
    std::sort(diff.begin(), diff.end());

    for (const auto& start : diff) {
        if (assigned.count(start)) continue;
        const PointSet comp = component_of(remaining, start, false, 0);

        // Seed: lexicographically smallest component cell adjacent to the
        // built shape, rooted at its smallest such neighbor.
        GridPoint seed{0, 0};
        GridPoint root{0, 0};
        bool found = false;
        std::vector<GridPoint> comp_sorted(comp.begin(), comp.end());
        std::sort(comp_sorted.begin(), comp_sorted.end());
        for (const auto& c : comp_sorted) {
            for (Direction d : kBfsOrder) {
                const GridPoint n = c + unit(d);
                if (initial.contains(n)) {
                    if (!found || c < seed || (c == seed && n < root)) {
                        seed = c;
                        root = n;
                    }
                    found = true;
                }
            }
            if (found) break;  // comp_sorted ascending: first hit is smallest
        }
        if (!found) throw ModelError("bfs constructor: component not adjacent to initial shape");

        // BFS within the component.
        std::queue<std::pair<GridPoint, int>> q;
        q.push({seed, 1});
        assigned.insert(seed);
        if (levels.empty()) levels.resize(1);
        levels[0].push_back({root, seed});
        while (!q.empty()) {
            auto [p, depth] = q.front();
            q.pop();
            for (Direction d : kBfsOrder) {
                const GridPoint n = p + unit(d);
                if (comp.count(n) && !assigned.count(n)) {
                    assigned.insert(n);
                    if (levels.size() < static_cast<std::size_t>(depth) + 1)
                        levels.resize(static_cast<std::size_t>(depth) + 1);
                    levels[static_cast<std::size_t>(depth)].push_back({p, n});
                    q.push({n, depth + 1});
                }
            }
        }
    }

    // Emit one pure-growth op per (level, direction), in N,E,S,W order.
    for (const auto& level : levels) {
        for (Direction d : kBfsOrder) {
            std::vector<std::pair<GridPoint, Direction>> gens;
            for (const auto& e : level)
                if (e.child - e.parent == unit(d)) gens.push_back({e.parent, d});
            if (gens.empty()) continue;
            std::sort(gens.begin(), gens.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            out.steps.push_back(PureGrowthOp{std::move(gens)});
        }
    }
    return out;
}

Constructor baseline_constructor(const Shape& target) {
    const BaselineProfile prof = baseline(target);
    const Shape seed = Shape::unchecked({prof.baseline.points().front()});

    Constructor out = bfs_constructor(seed, prof.baseline);
    Constructor rc = synthesize_rc(prof.baseline, target);
    out.steps.insert(out.steps.end(), rc.steps.begin(), rc.steps.end());
    return out;
}

namespace {

// In-place growth state of one rectangle from a fixed seed cell. The doubled
// lines are always taken on the far side of the seed, so the seed cell never
// translates and contact with the parent rectangle is kept.
struct GrowState {
    Rect rect;
    GridPoint seed;
    int x_lo, x_hi;  // occupied column interval
    int y_lo, y_hi;  // occupied row interval

    bool pending(Direction d) const {
        switch (d) {
            case Direction::East: return x_hi < rect.east_x();
            case Direction::West: return x_lo > rect.origin.x;
            case Direction::North: return y_hi < rect.north_y();
            case Direction::South: return y_lo > rect.origin.y;
        }
        return false;
    }

    // Lines to double for one step in direction d; advances the interval.
    std::vector<int> advance(Direction d) {
        std::vector<int> idx;
        switch (d) {
            case Direction::East: {
                const int cap = x_hi - seed.x + 1;
                const int t = std::min(cap, rect.east_x() - x_hi);
                for (int i = 0; i < t; ++i) idx.push_back(x_hi - t + 1 + i);
                x_hi += t;
                break;
            }
            case Direction::West: {
                const int cap = seed.x - x_lo + 1;
                const int t = std::min(cap, x_lo - rect.origin.x);
                for (int i = 0; i < t; ++i) idx.push_back(x_lo + i);
                x_lo -= t;
                break;
            }
            case Direction::North: {
                const int cap = y_hi - seed.y + 1;
                const int t = std::min(cap, rect.north_y() - y_hi);
                for (int i = 0; i < t; ++i) idx.push_back(y_hi - t + 1 + i);
                y_hi += t;
                break;
            }
            case Direction::South: {
                const int cap = seed.y - y_lo + 1;
                const int t = std::min(cap, y_lo - rect.origin.y);
                for (int i = 0; i < t; ++i) idx.push_back(y_lo + i);
                y_lo -= t;
                break;
            }
        }
        return idx;
    }
};

// Grows all states to their full footprints, sharing time-steps per
// direction phase: east, west, north, south.
void emit_growth_rounds(std::vector<GrowState>& states, std::vector<GrowthOp>& out) {
    for (Direction d : {Direction::East, Direction::West, Direction::North, Direction::South}) {
        while (true) {
            std::vector<RectGrowOp::Lane> lanes;
            for (auto& st : states)
                if (st.pending(d)) lanes.push_back({st.rect, st.advance(d)});
            if (lanes.empty()) break;
            out.push_back(RectGrowOp{d, std::move(lanes)});
        }
    }
}

}  // namespace

Constructor partition_constructor(const Shape& target) {
    if (target.size() == 1) return Constructor{target, {}};

    const RectPartition part = min_partition(target);
    const auto levels = part.levels();

    const Rect& root_rect = part.rects[static_cast<std::size_t>(part.root)];
    const Shape seed0 = Shape::unchecked({root_rect.origin});

    Constructor out{seed0, {}};
    std::vector<GrowState> root_state{
        {root_rect, root_rect.origin, root_rect.origin.x, root_rect.origin.x,
         root_rect.origin.y, root_rect.origin.y}};
    emit_growth_rounds(root_state, out.steps);

    // Cells built so far; parents are complete before their children seed.
    PointSet built;
    for (const auto& c : root_rect.cells()) built.insert(c);

    for (std::size_t depth = 1; depth < levels.size(); ++depth) {
        struct Pending {
            int rect_idx;
            GridPoint seed;
            GridPoint generator;
            Direction dir;
        };
        std::vector<Pending> pending;
        for (int ri : levels[depth]) {
            const Rect& r = part.rects[static_cast<std::size_t>(ri)];
            const Rect& pr = part.rects[static_cast<std::size_t>(part.parent[ri])];

            // Candidate seeds: cells of r adjacent to the parent rect,
            // corner cells preferred.
            std::vector<GridPoint> candidates;
            for (const auto& c : r.cells())
                for (Direction d : kAllDirections)
                    if (pr.contains(c + unit(d))) {
                        candidates.push_back(c);
                        break;
                    }
            if (candidates.empty())
                throw ModelError("partition constructor: child not adjacent to parent");
            std::sort(candidates.begin(), candidates.end());
            const GridPoint corners[4] = {r.origin,
                                          {r.east_x(), r.origin.y},
                                          {r.origin.x, r.north_y()},
                                          {r.east_x(), r.north_y()}};
            GridPoint seed = candidates.front();
            for (const auto& c : candidates) {
                const bool is_corner =
                    std::find(std::begin(corners), std::end(corners), c) != std::end(corners);
                if (is_corner) {
                    seed = c;
                    break;
                }
            }
            pending.push_back({ri, seed, {}, Direction::East});
        }

        // Assign generators; one pure-growth op per round, extra rounds only
        // when a parent cell would have to generate twice.
        std::vector<GrowState> states;
        while (!pending.empty()) {
            std::vector<std::pair<GridPoint, Direction>> gens;
            std::vector<GridPoint> round_seeds;
            PointSet used;
            std::vector<Pending> deferred;
            for (auto& p : pending) {
                bool placed = false;
                for (Direction d : kBfsOrder) {
                    const GridPoint g = p.seed + unit(d);
                    if (built.count(g) && !used.count(g)) {
                        used.insert(g);
                        gens.push_back({g, opposite(d)});
                        placed = true;
                        break;
                    }
                }
                if (placed) {
                    round_seeds.push_back(p.seed);
                    const Rect& r = part.rects[static_cast<std::size_t>(p.rect_idx)];
                    states.push_back({r, p.seed, p.seed.x, p.seed.x, p.seed.y, p.seed.y});
                } else {
                    deferred.push_back(p);
                }
            }
            if (gens.empty())
                throw ModelError("partition constructor: cannot seed a child rectangle");
            std::sort(gens.begin(), gens.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            out.steps.push_back(PureGrowthOp{std::move(gens)});
            for (const auto& c : round_seeds) built.insert(c);
            pending = std::move(deferred);
        }

        emit_growth_rounds(states, out.steps);
        for (const auto& st : states)
            for (const auto& c : st.rect.cells()) built.insert(c);
    }
    return out;
}

}  // namespace growth
