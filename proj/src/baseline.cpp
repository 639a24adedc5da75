#include "growth/baseline.hpp"

#include <algorithm>

namespace growth {

namespace {

// Columns of a normalized shape as sorted y-lists, indexed by x. Connectivity
// guarantees every x in [0, width) is occupied.
std::vector<std::vector<int>> column_sets(const Shape& s) {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(s.width()));
    for (const auto& p : s.points()) cols[static_cast<std::size_t>(p.x)].push_back(p.y);
    return cols;  // y's ascending because points are sorted by (x, y)
}

std::vector<std::vector<int>> row_sets(const Shape& s) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.height()));
    for (const auto& p : s.points()) rows[static_cast<std::size_t>(p.y)].push_back(p.x);
    for (auto& r : rows) std::sort(r.begin(), r.end());
    return rows;
}

// Run lengths of consecutive equal entries, plus which source index each
// compressed entry keeps.
struct Runs {
    std::vector<int> mult;
    std::vector<int> keep;
};

Runs runs_of(const std::vector<std::vector<int>>& lines) {
    Runs r;
    std::size_t i = 0;
    while (i < lines.size()) {
        std::size_t j = i + 1;
        while (j < lines.size() && lines[j] == lines[i]) ++j;
        r.mult.push_back(static_cast<int>(j - i));
        r.keep.push_back(static_cast<int>(i));
        i = j;
    }
    return r;
}

}  // namespace

BaselineProfile baseline(const Shape& s) {
    const Shape norm = normalize(s);

    const auto cols = column_sets(norm);
    const Runs col_runs = runs_of(cols);

    // Column-compressed shape: keep one column per run, compressed west.
    std::vector<GridPoint> compressed;
    compressed.reserve(norm.points().size());
    for (std::size_t r = 0; r < col_runs.keep.size(); ++r)
        for (int y : cols[static_cast<std::size_t>(col_runs.keep[r])])
            compressed.push_back({static_cast<int>(r), y});
    std::sort(compressed.begin(), compressed.end());
    const Shape col_base = Shape::unchecked(std::move(compressed));

    const auto rows = row_sets(col_base);
    const Runs row_runs = runs_of(rows);

    std::vector<GridPoint> base_pts;
    base_pts.reserve(col_base.points().size());
    for (std::size_t r = 0; r < row_runs.keep.size(); ++r)
        for (int x : rows[static_cast<std::size_t>(row_runs.keep[r])])
            base_pts.push_back({x, static_cast<int>(r)});
    std::sort(base_pts.begin(), base_pts.end());

    return BaselineProfile{Shape::unchecked(std::move(base_pts)), col_runs.mult, row_runs.mult};
}

Shape BaselineProfile::expand() const {
    if (static_cast<int>(col_mult.size()) != baseline.width() ||
        static_cast<int>(row_mult.size()) != baseline.height())
        throw OpError("profile multiplicities do not match the baseline dimensions");
    for (int m : col_mult)
        if (m < 1) throw OpError("multiplicities must be positive");
    for (int m : row_mult)
        if (m < 1) throw OpError("multiplicities must be positive");

    // Columns first: column r of the baseline is repeated col_mult[r] times.
    std::vector<int> col_start(col_mult.size(), 0);
    for (std::size_t r = 1; r < col_mult.size(); ++r)
        col_start[r] = col_start[r - 1] + col_mult[r - 1];
    std::vector<int> row_start(row_mult.size(), 0);
    for (std::size_t r = 1; r < row_mult.size(); ++r)
        row_start[r] = row_start[r - 1] + row_mult[r - 1];

    std::vector<GridPoint> pts;
    for (const auto& p : baseline.points()) {
        const auto cr = static_cast<std::size_t>(p.x);
        const auto rr = static_cast<std::size_t>(p.y);
        for (int dx = 0; dx < col_mult[cr]; ++dx)
            for (int dy = 0; dy < row_mult[rr]; ++dy)
                pts.push_back({col_start[cr] + dx, row_start[rr] + dy});
    }
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

}  // namespace growth
