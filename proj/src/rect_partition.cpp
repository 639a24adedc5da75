#include "growth/rect_partition.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace growth {

namespace {

using PointSet = std::unordered_set<GridPoint, PointHash>;

enum class Corner { Exterior, Convex, Edge, Pinch, Reflex, Interior };

struct Lattice {
    PointSet cells;

    bool occ(int x, int y) const { return cells.count({x, y}) != 0; }

    // Occupancy of the four cells around lattice point p:
    // SW=(x-1,y-1) SE=(x,y-1) NW=(x-1,y) NE=(x,y).
    Corner classify(GridPoint p, bool* sw = nullptr, bool* se = nullptr, bool* nw = nullptr,
                    bool* ne = nullptr) const {
        const bool a = occ(p.x - 1, p.y - 1), b = occ(p.x, p.y - 1), c = occ(p.x - 1, p.y),
                   d = occ(p.x, p.y);
        if (sw) *sw = a;
        if (se) *se = b;
        if (nw) *nw = c;
        if (ne) *ne = d;
        const int n = int(a) + int(b) + int(c) + int(d);
        switch (n) {
            case 0: return Corner::Exterior;
            case 1: return Corner::Convex;
            case 2: return ((a && d) || (b && c)) ? Corner::Pinch : Corner::Edge;
            case 3: return Corner::Reflex;
            default: return Corner::Interior;
        }
    }
};

struct Chord {
    GridPoint from;  // smaller endpoint
    GridPoint to;
};

// Maximum bipartite matching via Hopcroft-Karp. Left = horizontal chords,
// right = vertical chords; edges where chords cross or touch.
struct HopcroftKarp {
    int n_left, n_right;
    std::vector<std::vector<int>> adj;
    std::vector<int> match_l, match_r, dist;

    HopcroftKarp(int nl, int nr) : n_left(nl), n_right(nr), adj(static_cast<std::size_t>(nl)) {}

    void add_edge(int l, int r) { adj[static_cast<std::size_t>(l)].push_back(r); }

    bool bfs() {
        std::queue<int> q;
        dist.assign(static_cast<std::size_t>(n_left), -1);
        for (int l = 0; l < n_left; ++l)
            if (match_l[static_cast<std::size_t>(l)] < 0) {
                dist[static_cast<std::size_t>(l)] = 0;
                q.push(l);
            }
        bool found = false;
        while (!q.empty()) {
            const int l = q.front();
            q.pop();
            for (int r : adj[static_cast<std::size_t>(l)]) {
                const int l2 = match_r[static_cast<std::size_t>(r)];
                if (l2 < 0)
                    found = true;
                else if (dist[static_cast<std::size_t>(l2)] < 0) {
                    dist[static_cast<std::size_t>(l2)] = dist[static_cast<std::size_t>(l)] + 1;
                    q.push(l2);
                }
            }
        }
        return found;
    }

    bool dfs(int l) {
        for (int r : adj[static_cast<std::size_t>(l)]) {
            const int l2 = match_r[static_cast<std::size_t>(r)];
            if (l2 < 0 || (dist[static_cast<std::size_t>(l2)] ==
                               dist[static_cast<std::size_t>(l)] + 1 &&
                           dfs(l2))) {
                match_l[static_cast<std::size_t>(l)] = r;
                match_r[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        dist[static_cast<std::size_t>(l)] = -1;
        return false;
    }

    int run() {
        match_l.assign(static_cast<std::size_t>(n_left), -1);
        match_r.assign(static_cast<std::size_t>(n_right), -1);
        int m = 0;
        while (bfs())
            for (int l = 0; l < n_left; ++l)
                if (match_l[static_cast<std::size_t>(l)] < 0 && dfs(l)) ++m;
        return m;
    }
};

}  // namespace

std::vector<std::vector<int>> RectPartition::levels() const {
    std::vector<int> depth(rects.size(), -1);
    depth[static_cast<std::size_t>(root)] = 0;
    // parent[] forms a tree; resolve depths iteratively.
    bool changed = true;
    int max_depth = 0;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            if (depth[i] >= 0 || parent[i] < 0) continue;
            const int pd = depth[static_cast<std::size_t>(parent[i])];
            if (pd >= 0) {
                depth[i] = pd + 1;
                max_depth = std::max(max_depth, pd + 1);
                changed = true;
            }
        }
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(max_depth) + 1);
    for (std::size_t i = 0; i < rects.size(); ++i)
        out[static_cast<std::size_t>(depth[i])].push_back(static_cast<int>(i));
    return out;
}

RectPartition min_partition(const Shape& s) {
    Lattice grid;
    for (const auto& p : s.points()) grid.cells.insert(p);

    // Concave (reflex) lattice points, with their single empty quadrant.
    std::vector<GridPoint> reflex;
    for (const auto& c : s.points())
        for (int dx = 0; dx <= 1; ++dx)
            for (int dy = 0; dy <= 1; ++dy) {
                const GridPoint p{c.x + dx, c.y + dy};
                if (grid.classify(p) == Corner::Reflex) reflex.push_back(p);
            }
    std::sort(reflex.begin(), reflex.end());
    reflex.erase(std::unique(reflex.begin(), reflex.end()), reflex.end());

    // Chords: axis-parallel segments between two reflex vertices whose
    // interior passes only through interior lattice points.
    std::vector<Chord> verticals, horizontals;
    for (const auto& v : reflex) {
        bool sw, se, nw, ne;
        grid.classify(v, &sw, &se, &nw, &ne);
        if (nw && ne) {  // corridor continues north
            GridPoint q{v.x, v.y + 1};
            while (grid.classify(q) == Corner::Interior) ++q.y;
            if (grid.classify(q) == Corner::Reflex) verticals.push_back({v, q});
        }
        if (ne && se) {  // corridor continues east
            GridPoint q{v.x + 1, v.y};
            while (grid.classify(q) == Corner::Interior) ++q.x;
            if (grid.classify(q) == Corner::Reflex) horizontals.push_back({v, q});
        }
    }

    // Maximum independent set of chords via Koenig's theorem.
    HopcroftKarp hk(static_cast<int>(horizontals.size()), static_cast<int>(verticals.size()));
    for (std::size_t h = 0; h < horizontals.size(); ++h)
        for (std::size_t v = 0; v < verticals.size(); ++v) {
            const Chord& hc = horizontals[h];
            const Chord& vc = verticals[v];
            if (vc.from.x >= hc.from.x && vc.from.x <= hc.to.x && hc.from.y >= vc.from.y &&
                hc.from.y <= vc.to.y)
                hk.add_edge(static_cast<int>(h), static_cast<int>(v));
        }
    hk.run();

    // Koenig: alternate from unmatched left vertices; min cover is
    // (L \ visited) + (R ∩ visited); the independent set is its complement.
    std::vector<bool> vis_l(horizontals.size(), false), vis_r(verticals.size(), false);
    std::queue<int> q;
    for (std::size_t l = 0; l < horizontals.size(); ++l)
        if (hk.match_l[l] < 0) {
            vis_l[l] = true;
            q.push(static_cast<int>(l));
        }
    while (!q.empty()) {
        const int l = q.front();
        q.pop();
        for (int r : hk.adj[static_cast<std::size_t>(l)]) {
            if (vis_r[static_cast<std::size_t>(r)]) continue;
            if (hk.match_l[static_cast<std::size_t>(l)] == r) continue;  // non-matching only
            vis_r[static_cast<std::size_t>(r)] = true;
            const int l2 = hk.match_r[static_cast<std::size_t>(r)];
            if (l2 >= 0 && !vis_l[static_cast<std::size_t>(l2)]) {
                vis_l[static_cast<std::size_t>(l2)] = true;
                q.push(l2);
            }
        }
    }

    std::vector<Chord> chosen;
    for (std::size_t l = 0; l < horizontals.size(); ++l)
        if (vis_l[l]) chosen.push_back(horizontals[l]);
    for (std::size_t r = 0; r < verticals.size(); ++r)
        if (!vis_r[r]) chosen.push_back(verticals[r]);

    // Cut bookkeeping. A vertical cut unit (x, y) separates cells (x-1, y)
    // and (x, y); a horizontal cut unit (x, y) separates (x, y-1) and (x, y).
    PointSet vcut, hcut, cut_points, resolved;
    auto add_vertical_run = [&](GridPoint from, int y_to) {
        for (int y = from.y; y < y_to; ++y) vcut.insert({from.x, y});
        for (int y = from.y; y <= y_to; ++y) cut_points.insert({from.x, y});
    };
    auto add_horizontal_run = [&](GridPoint from, int x_to) {
        for (int x = from.x; x < x_to; ++x) hcut.insert({x, from.y});
        for (int x = from.x; x <= x_to; ++x) cut_points.insert({x, from.y});
    };
    for (const auto& c : chosen) {
        if (c.from.x == c.to.x)
            add_vertical_run(c.from, c.to.y);
        else
            add_horizontal_run(c.from, c.to.x);
        resolved.insert(c.from);
        resolved.insert(c.to);
    }

    // Every remaining concave vertex is resolved with a vertical cut to the
    // nearest boundary or existing cut.
    for (const auto& v : reflex) {
        if (resolved.count(v)) continue;
        bool sw, se, nw, ne;
        grid.classify(v, &sw, &se, &nw, &ne);
        const bool up = nw && ne;  // otherwise the corridor is south
        GridPoint p = v;
        cut_points.insert(p);
        while (true) {
            const int edge_y = up ? p.y : p.y - 1;
            if (!grid.occ(v.x - 1, edge_y) || !grid.occ(v.x, edge_y)) break;
            vcut.insert({v.x, edge_y});
            const GridPoint next{v.x, up ? p.y + 1 : p.y - 1};
            const bool hit = cut_points.count(next) != 0;
            cut_points.insert(next);
            p = next;
            if (hit || grid.classify(p) != Corner::Interior) break;
        }
    }

    // Flood-fill cells with cut edges blocked; every region must come out a
    // rectangle.
    std::unordered_map<GridPoint, int, PointHash> region;
    std::vector<Rect> rects;
    for (const auto& start : s.points()) {
        if (region.count(start)) continue;
        const int id = static_cast<int>(rects.size());
        std::queue<GridPoint> bfsq;
        bfsq.push(start);
        region[start] = id;
        GridPoint lo = start, hi = start;
        int count = 0;
        while (!bfsq.empty()) {
            const GridPoint c = bfsq.front();
            bfsq.pop();
            ++count;
            lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
            hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
            const struct {
                GridPoint to;
                bool blocked;
            } moves[4] = {
                {{c.x + 1, c.y}, vcut.count({c.x + 1, c.y}) != 0},
                {{c.x - 1, c.y}, vcut.count({c.x, c.y}) != 0},
                {{c.x, c.y + 1}, hcut.count({c.x, c.y + 1}) != 0},
                {{c.x, c.y - 1}, hcut.count({c.x, c.y}) != 0},
            };
            for (const auto& mv : moves) {
                if (mv.blocked || !grid.cells.count(mv.to) || region.count(mv.to)) continue;
                region[mv.to] = id;
                bfsq.push(mv.to);
            }
        }
        const Rect r{lo, hi.x - lo.x + 1, hi.y - lo.y + 1};
        if (r.area() != count) throw ModelError("min_partition: region is not a rectangle");
        rects.push_back(r);
    }

    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) {
        return std::pair{a.origin, std::pair{a.width, a.height}} <
               std::pair{b.origin, std::pair{b.width, b.height}};
    });
    return build_adjacency_and_tree(std::move(rects));
}

RectPartition build_adjacency_and_tree(std::vector<Rect> rects) {
    if (rects.empty()) throw OpError("partition: no rectangles");
    std::unordered_map<GridPoint, int, PointHash> owner;
    for (std::size_t i = 0; i < rects.size(); ++i)
        for (const auto& c : rects[i].cells()) {
            if (!owner.emplace(c, static_cast<int>(i)).second)
                throw OpError("partition: rectangles overlap");
        }

    std::vector<std::unordered_set<int>> adj(rects.size());
    for (const auto& [c, i] : owner) {
        for (const GridPoint n : {GridPoint{c.x + 1, c.y}, GridPoint{c.x, c.y + 1}}) {
            auto it = owner.find(n);
            if (it != owner.end() && it->second != i) {
                adj[static_cast<std::size_t>(i)].insert(it->second);
                adj[static_cast<std::size_t>(it->second)].insert(i);
            }
        }
    }

    RectPartition part;
    part.rects = std::move(rects);
    part.adjacency.resize(part.rects.size());
    for (std::size_t i = 0; i < part.rects.size(); ++i) {
        part.adjacency[i].assign(adj[i].begin(), adj[i].end());
        std::sort(part.adjacency[i].begin(), part.adjacency[i].end());
    }

    // Root: maximum area, ties to the smallest southwest corner.
    int root = 0;
    for (std::size_t i = 1; i < part.rects.size(); ++i) {
        const Rect& a = part.rects[i];
        const Rect& b = part.rects[static_cast<std::size_t>(root)];
        if (a.area() > b.area() || (a.area() == b.area() && a.origin < b.origin))
            root = static_cast<int>(i);
    }
    part.root = root;

    part.parent.assign(part.rects.size(), -1);
    std::vector<bool> seen(part.rects.size(), false);
    std::queue<int> q;
    q.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        const int i = q.front();
        q.pop();
        for (int n : part.adjacency[static_cast<std::size_t>(i)])
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = true;
                part.parent[static_cast<std::size_t>(n)] = i;
                q.push(n);
                ++reached;
            }
    }
    if (reached != part.rects.size())
        throw OpError("partition: rectangle union is disconnected");
    return part;
}

}  // namespace growth
