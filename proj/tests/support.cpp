#include "support.hpp"

#include <cstdint>

namespace testutil {

namespace {

// Compact canonical key for a normalized shape with <= 16 cells in a 16x16 box.
using Key = std::pair<std::uint64_t, std::uint64_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = k.first * 0x9e3779b97f4a7c15ull;
        h ^= k.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

Key key_of(const Shape& s) {
    Key k{0, 0};
    std::size_t i = 0;
    for (const auto& p : s.points()) {
        const std::uint64_t code = static_cast<std::uint64_t>((p.x << 4) | p.y) & 0xff;
        if (i < 8)
            k.first |= code << (8 * i);
        else
            k.second |= code << (8 * (i - 8));
        ++i;
    }
    return k;
}

}  // namespace

std::vector<std::vector<Shape>> enumerate_connected_upto(int n) {
    std::vector<std::vector<Shape>> buckets;
    buckets.push_back({Shape::unchecked({{0, 0}})});
    for (int size = 2; size <= n; ++size) {
        std::vector<Shape> next;
        std::unordered_set<Key, KeyHash> seen;
        for (const Shape& s : buckets.back()) {
            for (const auto& p : s.points()) {
                for (growth::Direction d : growth::kAllDirections) {
                    const GridPoint q = p + unit(d);
                    if (s.contains(q)) continue;
                    std::vector<GridPoint> pts = s.points();
                    pts.push_back(q);
                    std::sort(pts.begin(), pts.end());
                    const Shape grown = growth::normalize(Shape::unchecked(std::move(pts)));
                    if (seen.insert(key_of(grown)).second) next.push_back(grown);
                }
            }
        }
        buckets.push_back(std::move(next));
    }
    return buckets;
}

std::vector<Shape> enumerate_connected(int n) { return enumerate_connected_upto(n).back(); }

namespace {

// Shape plus per-line weights; merging keeps the weights of collapsed runs.
struct MergeState {
    std::vector<GridPoint> pts;
    std::vector<int> colw;
    std::vector<int> roww;

    static MergeState from(const Shape& s) {
        const Shape n = growth::normalize(s);
        MergeState st;
        st.pts = n.points();
        st.colw.assign(static_cast<std::size_t>(n.width()), 1);
        st.roww.assign(static_cast<std::size_t>(n.height()), 1);
        return st;
    }

    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols(colw.size());
        for (const auto& p : pts) cols[static_cast<std::size_t>(p.x)].push_back(p.y);
        for (auto& c : cols) std::sort(c.begin(), c.end());
        return cols;
    }
    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> rws(roww.size());
        for (const auto& p : pts) rws[static_cast<std::size_t>(p.y)].push_back(p.x);
        for (auto& r : rws) std::sort(r.begin(), r.end());
        return rws;
    }

    void merge_col(int i) {  // merge column i+1 into column i
        std::vector<GridPoint> next;
        for (const auto& p : pts) {
            if (p.x == i + 1) continue;
            next.push_back({p.x > i + 1 ? p.x - 1 : p.x, p.y});
        }
        pts = std::move(next);
        colw[static_cast<std::size_t>(i)] += colw[static_cast<std::size_t>(i) + 1];
        colw.erase(colw.begin() + i + 1);
    }
    void merge_row(int i) {
        std::vector<GridPoint> next;
        for (const auto& p : pts) {
            if (p.y == i + 1) continue;
            next.push_back({p.x, p.y > i + 1 ? p.y - 1 : p.y});
        }
        pts = std::move(next);
        roww[static_cast<std::size_t>(i)] += roww[static_cast<std::size_t>(i) + 1];
        roww.erase(roww.begin() + i + 1);
    }
};

}  // namespace

growth::BaselineProfile random_order_baseline(const Shape& s, Rng& rng) {
    MergeState st = MergeState::from(s);
    while (true) {
        std::vector<std::pair<bool, int>> moves;  // (is_column, index)
        const auto cols = st.columns();
        for (std::size_t i = 0; i + 1 < cols.size(); ++i)
            if (cols[i] == cols[i + 1]) moves.push_back({true, static_cast<int>(i)});
        const auto rows = st.rows();
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            if (rows[i] == rows[i + 1]) moves.push_back({false, static_cast<int>(i)});
        if (moves.empty()) break;
        const auto [is_col, idx] =
            moves[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(moves.size()) - 1))];
        if (is_col)
            st.merge_col(idx);
        else
            st.merge_row(idx);
    }
    std::vector<GridPoint> pts = st.pts;
    std::sort(pts.begin(), pts.end());
    return growth::BaselineProfile{Shape::unchecked(std::move(pts)), st.colw, st.roww};
}

}  // namespace testutil
