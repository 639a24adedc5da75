#include "growth/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_set>

namespace growth {

GridPoint unit(Direction d) {
    switch (d) {
        case Direction::North: return {0, 1};
        case Direction::East: return {1, 0};
        case Direction::South: return {0, -1};
        case Direction::West: return {-1, 0};
    }
    return {};
}

Direction opposite(Direction d) {
    switch (d) {
        case Direction::North: return Direction::South;
        case Direction::East: return Direction::West;
        case Direction::South: return Direction::North;
        case Direction::West: return Direction::East;
    }
    return Direction::North;
}

bool is_horizontal(Direction d) { return d == Direction::East || d == Direction::West; }

std::string_view name(Direction d) {
    switch (d) {
        case Direction::North: return "north";
        case Direction::East: return "east";
        case Direction::South: return "south";
        case Direction::West: return "west";
    }
    return "?";
}

std::optional<Direction> direction_from(std::string_view s) {
    if (s == "north") return Direction::North;
    if (s == "east") return Direction::East;
    if (s == "south") return Direction::South;
    if (s == "west") return Direction::West;
    return std::nullopt;
}

Shape::Shape(std::vector<GridPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) throw ShapeError("shape must contain at least one node");
    if (!is_connected(pts)) throw ShapeError("shape must be connected under 4-adjacency");
    pts_ = std::move(pts);
}

Shape Shape::unchecked(std::vector<GridPoint> sorted_unique) {
    assert(std::is_sorted(sorted_unique.begin(), sorted_unique.end()));
    assert(!sorted_unique.empty());
    Shape s;
    s.pts_ = std::move(sorted_unique);
    return s;
}

bool Shape::contains(GridPoint p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

int Shape::min_x() const {
    return pts_.front().x;  // sorted by (x, y)
}

int Shape::max_x() const { return pts_.back().x; }

int Shape::min_y() const {
    int m = pts_.front().y;
    for (const auto& p : pts_) m = std::min(m, p.y);
    return m;
}

int Shape::max_y() const {
    int m = pts_.front().y;
    for (const auto& p : pts_) m = std::max(m, p.y);
    return m;
}

std::size_t ShapeHash::operator()(const Shape& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& p : s.points()) {
        h ^= static_cast<std::uint32_t>(p.x);
        h *= 1099511628211ull;
        h ^= static_cast<std::uint32_t>(p.y);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::vector<GridPoint> Rect::cells() const {
    std::vector<GridPoint> out;
    out.reserve(static_cast<std::size_t>(area()));
    for (int x = origin.x; x <= east_x(); ++x)
        for (int y = origin.y; y <= north_y(); ++y) out.push_back({x, y});
    return out;
}

Shape rect_shape(GridPoint u, int p, int q) {
    if (p < 1 || q < 1) throw OpError("rectangle sides must be positive");
    return Shape::unchecked(Rect{u, p, q}.cells());
}

Shape translated(const Shape& s, int dx, int dy) {
    std::vector<GridPoint> pts;
    pts.reserve(s.points().size());
    for (const auto& p : s.points()) pts.push_back({p.x + dx, p.y + dy});
    return Shape::unchecked(std::move(pts));  // order preserved by uniform shift
}

Shape translate(const Shape& s, Direction d, int k) {
    if (k < 0) throw OpError("translation distance must be non-negative");
    const GridPoint u = unit(d);
    return translated(s, u.x * k, u.y * k);
}

std::vector<GridPoint> column(const Shape& s, int x) {
    std::vector<GridPoint> out;
    auto lo = std::lower_bound(s.points().begin(), s.points().end(), GridPoint{x, INT32_MIN});
    for (auto it = lo; it != s.points().end() && it->x == x; ++it) out.push_back(*it);
    return out;
}

std::vector<GridPoint> row(const Shape& s, int y) {
    std::vector<GridPoint> out;
    for (const auto& p : s.points())
        if (p.y == y) out.push_back(p);
    return out;
}

int west_offset(const Shape& s, GridPoint u) {
    if (!s.contains(u)) throw OpError("west_offset: node not in shape");
    return u.x - s.min_x();
}

int south_offset(const Shape& s, GridPoint u) {
    if (!s.contains(u)) throw OpError("south_offset: node not in shape");
    return u.y - s.min_y();
}

bool is_connected(std::span<const GridPoint> pts) {
    if (pts.empty()) return false;
    std::unordered_set<GridPoint, PointHash> unseen(pts.begin(), pts.end());
    std::queue<GridPoint> frontier;
    frontier.push(pts.front());
    unseen.erase(pts.front());
    while (!frontier.empty()) {
        GridPoint p = frontier.front();
        frontier.pop();
        for (Direction d : kAllDirections) {
            GridPoint q = p + unit(d);
            auto it = unseen.find(q);
            if (it != unseen.end()) {
                unseen.erase(it);
                frontier.push(q);
            }
        }
    }
    return unseen.empty();
}

Shape normalize(const Shape& s) { return translated(s, -s.min_x(), -s.min_y()); }

bool equal_up_to_translation(const Shape& a, const Shape& b) {
    if (a.size() != b.size()) return false;
    const auto& pa = a.points();
    const auto& pb = b.points();
    const GridPoint delta = pb.front() - pa.front();
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (pb[i] - pa[i] != delta) return false;
    return true;
}

}  // namespace growth
