#include "growth/full_doubling.hpp"

#include <algorithm>

namespace growth {

Shape apply_full_doubling(const Shape& s, Direction d) {
    std::vector<GridPoint> pts;
    pts.reserve(s.points().size() * 2);
    switch (d) {
        case Direction::East: {
            const int m = s.min_x();
            for (const auto& p : s.points()) {
                const int x = m + 2 * (p.x - m);
                pts.push_back({x, p.y});
                pts.push_back({x + 1, p.y});
            }
            break;
        }
        case Direction::West: {
            const int m = s.max_x();
            for (const auto& p : s.points()) {
                const int x = m - 2 * (m - p.x);
                pts.push_back({x, p.y});
                pts.push_back({x - 1, p.y});
            }
            break;
        }
        case Direction::North: {
            const int m = s.min_y();
            for (const auto& p : s.points()) {
                const int y = m + 2 * (p.y - m);
                pts.push_back({p.x, y});
                pts.push_back({p.x, y + 1});
            }
            break;
        }
        case Direction::South: {
            const int m = s.max_y();
            for (const auto& p : s.points()) {
                const int y = m - 2 * (m - p.y);
                pts.push_back({p.x, y});
                pts.push_back({p.x, y - 1});
            }
            break;
        }
    }
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

Shape reconfigure(const Shape& s, FullDoublingCounts c) {
    if (c.horizontal < 0 || c.vertical < 0) throw OpError("doubling counts must be non-negative");
    const int p = 1 << c.horizontal;
    const int q = 1 << c.vertical;
    const int min_x = s.min_x();
    const int min_y = s.min_y();
    std::vector<GridPoint> pts;
    pts.reserve(s.points().size() * static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
    for (const auto& u : s.points()) {
        const int ux = u.x + (p - 1) * (u.x - min_x);
        const int uy = u.y + (q - 1) * (u.y - min_y);
        for (int dx = 0; dx < p; ++dx)
            for (int dy = 0; dy < q; ++dy) pts.push_back({ux + dx, uy + dy});
    }
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

std::optional<FullDoublingCounts> reach_full_doubling(const Shape& from, const Shape& to) {
    const long long a = from.size();
    const long long b = to.size();
    if (b % a != 0) return std::nullopt;
    const long long q = b / a;
    if ((q & (q - 1)) != 0) return std::nullopt;  // not a power of two
    int m = 0;
    while ((1ll << m) < q) ++m;
    for (int l = 0; l <= m; ++l) {
        FullDoublingCounts c{l, m - l};
        if (equal_up_to_translation(reconfigure(from, c), to)) return c;
    }
    return std::nullopt;
}

}  // namespace growth
