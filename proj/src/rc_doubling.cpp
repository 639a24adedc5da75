#include "growth/rc_doubling.hpp"

#include <algorithm>
#include <set>

namespace growth {

namespace {

void check_axis(Axis axis, Direction d) {
    const bool ok = (axis == Axis::Column) ? is_horizontal(d) : !is_horizontal(d);
    if (!ok) throw OpError("rc: direction incompatible with axis");
}

// Occupied line coordinates along the doubling axis.
std::vector<int> line_coords(const Shape& s, Axis axis) {
    std::set<int> seen;
    for (const auto& p : s.points()) seen.insert(axis == Axis::Column ? p.x : p.y);
    return {seen.begin(), seen.end()};
}

}  // namespace

Shape apply_rc(const Shape& s, const RcOp& op) {
    check_axis(op.axis, op.dir);
    if (op.indices.empty()) throw OpError("rc: empty index set");

    std::vector<int> sel = op.indices;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());

    const std::vector<int> occupied = line_coords(s, op.axis);
    for (int idx : sel)
        if (!std::binary_search(occupied.begin(), occupied.end(), idx))
            throw OpError("rc: index " + std::to_string(idx) + " names an empty line");

    const bool positive = op.dir == Direction::East || op.dir == Direction::North;
    std::vector<GridPoint> pts;
    pts.reserve(s.points().size() * 2);
    for (const auto& p : s.points()) {
        const int c = (op.axis == Axis::Column) ? p.x : p.y;
        // Doubled lines strictly on the near side of c.
        int shift;
        if (positive)
            shift = static_cast<int>(std::lower_bound(sel.begin(), sel.end(), c) - sel.begin());
        else
            shift = static_cast<int>(sel.end() - std::upper_bound(sel.begin(), sel.end(), c));
        const int sgn = positive ? 1 : -1;
        const int moved = c + sgn * shift;
        const bool doubled = std::binary_search(sel.begin(), sel.end(), c);
        auto emit = [&](int v) {
            if (op.axis == Axis::Column)
                pts.push_back({v, p.y});
            else
                pts.push_back({p.x, v});
        };
        emit(moved);
        if (doubled) emit(moved + sgn);
    }
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

Shape apply_single_rc(const Shape& s, Axis axis, Direction d, int index) {
    check_axis(axis, d);
    const std::vector<int> occupied = line_coords(s, axis);
    if (!std::binary_search(occupied.begin(), occupied.end(), index))
        throw OpError("rc: index " + std::to_string(index) + " names an empty line");

    const bool positive = d == Direction::East || d == Direction::North;
    std::vector<GridPoint> pts;
    pts.reserve(s.points().size() + 8);
    for (const auto& p : s.points()) {
        const int c = (axis == Axis::Column) ? p.x : p.y;
        const bool far_side = positive ? (c >= index) : (c <= index);
        const int v = far_side ? c + (positive ? 1 : -1) : c;
        auto emit = [&](int w) {
            if (axis == Axis::Column)
                pts.push_back({w, p.y});
            else
                pts.push_back({p.x, w});
        };
        emit(v);
        if (c == index) emit(c);  // the doubled line keeps its original cells too
    }
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

std::vector<RcOp> serialize_parallel(const Shape& s, const RcOp& op) {
    check_axis(op.axis, op.dir);
    std::vector<int> sel = op.indices;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    if (sel.empty()) throw OpError("rc: empty index set");

    const std::vector<int> occupied = line_coords(s, op.axis);
    for (int idx : sel)
        if (!std::binary_search(occupied.begin(), occupied.end(), idx))
            throw OpError("rc: index " + std::to_string(idx) + " names an empty line");

    const bool positive = op.dir == Direction::East || op.dir == Direction::North;
    if (!positive) std::reverse(sel.begin(), sel.end());

    std::vector<RcOp> singles;
    singles.reserve(sel.size());
    for (std::size_t i = 0; i < sel.size(); ++i) {
        const int readdressed = sel[i] + (positive ? 1 : -1) * static_cast<int>(i);
        singles.push_back(RcOp{op.axis, op.dir, {readdressed}});
    }
    return singles;
}

bool decide_rc(const Shape& from, const Shape& to) {
    const BaselineProfile a = baseline(from);
    const BaselineProfile b = baseline(to);
    if (a.baseline != b.baseline) return false;
    if (a.col_mult.size() != b.col_mult.size() || a.row_mult.size() != b.row_mult.size())
        return false;
    for (std::size_t i = 0; i < a.col_mult.size(); ++i)
        if (a.col_mult[i] > b.col_mult[i]) return false;
    for (std::size_t i = 0; i < a.row_mult.size(); ++i)
        if (a.row_mult[i] > b.row_mult[i]) return false;
    return true;
}

namespace {

// One doubling phase over runs of identical lines. Each run holding m copies
// against a target M doubles all copies while 2m <= M, then its near-side
// M - m copies once. All runs advance in the same parallel steps.
void schedule_phase(std::vector<int> current, const std::vector<int>& target, Axis axis,
                    std::vector<GrowthOp>& out) {
    const std::size_t runs = current.size();
    while (true) {
        std::vector<int> indices;
        int start = 0;
        for (std::size_t r = 0; r < runs; ++r) {
            const int m = current[r];
            const int M = target[r];
            if (m < M) {
                const int t = (2 * m <= M) ? m : (M - m);
                for (int i = 0; i < t; ++i) indices.push_back(start + i);
                current[r] += t;
            }
            start += m;
        }
        if (indices.empty()) break;
        const Direction d = (axis == Axis::Column) ? Direction::East : Direction::North;
        out.push_back(RcOp{axis, d, std::move(indices)});
    }
}

}  // namespace

Constructor synthesize_rc(const Shape& from, const Shape& to) {
    if (!decide_rc(from, to)) throw OpError("rc: target not reachable from initial shape");

    const BaselineProfile a = baseline(from);
    const BaselineProfile b = baseline(to);

    std::vector<GrowthOp> steps;
    schedule_phase(a.col_mult, b.col_mult, Axis::Column, steps);
    schedule_phase(a.row_mult, b.row_mult, Axis::Row, steps);
    return Constructor{normalize(from), std::move(steps)};
}

}  // namespace growth
