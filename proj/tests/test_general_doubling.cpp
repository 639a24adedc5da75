#include <doctest.h>

#include <algorithm>
#include <unordered_set>

#include "growth/general_doubling.hpp"
#include "growth/oracle.hpp"
#include "growth/rect_partition.hpp"
#include "support.hpp"

using namespace growth;

namespace {

NodeDoubleOp preserving(GridPoint u, Direction d) {
    return NodeDoubleOp{u, d, RigidityMode::Preserving, {}};
}

NodeDoubleOp breaking(GridPoint u, Direction d, std::vector<GridEdge> breaks = {}) {
    return NodeDoubleOp{u, d, RigidityMode::Breaking, std::move(breaks)};
}

}  // namespace

TEST_SUITE_BEGIN("general-doubling");

TEST_CASE("doubling into empty space adds one node") {
    CHECK(apply_node_doubling(Shape({{0, 0}}), preserving({0, 0}, Direction::East)) ==
          Shape({{0, 0}, {1, 0}}));
    CHECK_THROWS_AS(apply_node_doubling(Shape({{0, 0}}), preserving({3, 3}, Direction::East)),
                    OpError);
}

TEST_CASE("preserving doubling fills every attachment point") {
    // Column x=0 against column x=1; one node of C_0 doubles east: the whole
    // east column shifts and all three cut edges regrow.
    const Shape s({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
    const NodeDoublingEffect eff =
        apply_node_doubling_effect(s, preserving({0, 1}, Direction::East));
    CHECK(eff.result == rect_shape({0, 0}, 3, 3));
    CHECK(eff.translated == std::vector<GridPoint>{{1, 0}, {1, 1}, {1, 2}});
    CHECK(eff.generated == std::vector<GridPoint>{{1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("breaking doubling may drop a cut edge") {
    // Unit square; u=(0,0) doubles east. The cut above uv either regrows
    // (preserving) or breaks away.
    const Shape square = rect_shape({0, 0}, 2, 2);
    const Shape kept = apply_node_doubling(square, preserving({0, 0}, Direction::East));
    CHECK(kept == rect_shape({0, 0}, 3, 2));

    const GridEdge top = GridEdge::make({0, 1}, {1, 1});
    const Shape broken = apply_node_doubling(square, breaking({0, 0}, Direction::East, {top}));
    CHECK(broken == Shape({{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 1}}));
}

TEST_CASE("breaking with empty break set equals preserving") {
    testutil::Rng rng(401);
    for (int i = 0; i < 60; ++i) {
        const Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 14));
        const GridPoint u =
            s.points()[static_cast<std::size_t>(testutil::rand_int(rng, 0, s.size() - 1))];
        const Direction d = kAllDirections[testutil::rand_int(rng, 0, 3)];
        CHECK(apply_node_doubling(s, preserving(u, d)) == apply_node_doubling(s, breaking(u, d)));
    }
}

TEST_CASE("break validation") {
    const Shape square = rect_shape({0, 0}, 2, 2);
    CHECK_THROWS_AS(apply_node_doubling(
                        square, breaking({0, 0}, Direction::East, {GridEdge::make({0, 0}, {1, 0})})),
                    OpError);  // the uv edge itself
    CHECK_THROWS_AS(apply_node_doubling(
                        square, breaking({0, 0}, Direction::East, {GridEdge::make({5, 5}, {6, 5})})),
                    OpError);  // not a bicolor edge
    const NodeDoubleOp bad{{0, 0}, Direction::North, RigidityMode::Preserving,
                           {GridEdge::make({0, 0}, {1, 0})}};
    CHECK_THROWS_AS(apply_node_doubling(square, bad), OpError);  // breaks in preserving mode
}

TEST_CASE("components not translating stay put") {
    // A hook: only the far side of the cut moves; the passive arm stays.
    const Shape s({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 0}});
    const NodeDoublingEffect eff =
        apply_node_doubling_effect(s, preserving({0, 0}, Direction::East));
    CHECK(eff.translated == std::vector<GridPoint>{{1, 0}});
    CHECK(eff.result == Shape({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}}));
}

TEST_CASE("a translating component may wrap around the stationary side") {
    // C-shape open to the west: doubling the isolated west cell pushes the
    // whole arc east, including the arc's own west arm.
    const Shape s({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}});
    const NodeDoublingEffect eff =
        apply_node_doubling_effect(s, preserving({0, 0}, Direction::East));
    CHECK(eff.result ==
          Shape({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {2, 2}, {1, 2}}));
    CHECK(eff.translated.size() == 6);  // everything but u itself
    CHECK(eff.generated == std::vector<GridPoint>{{1, 0}});
}

TEST_CASE("growth and connectivity invariants under random node ops") {
    testutil::Rng rng(402);
    for (int i = 0; i < 120; ++i) {
        Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 10));
        for (int step = 0; step < 6; ++step) {
            const GridPoint u =
                s.points()[static_cast<std::size_t>(testutil::rand_int(rng, 0, s.size() - 1))];
            const Direction d = kAllDirections[testutil::rand_int(rng, 0, 3)];
            const Shape next = apply_node_doubling(s, preserving(u, d));
            CHECK(next.size() > s.size());
            CHECK(is_connected(next.points()));
            s = next;
        }
    }
}

TEST_CASE("pure growth") {
    const Shape dot({{0, 0}});
    CHECK(apply_pure_growth(dot, PureGrowthOp{{{{0, 0}, Direction::East}}}) ==
          Shape({{0, 0}, {1, 0}}));

    const Shape ell({{0, 0}, {0, 1}, {1, 0}});
    const Shape grown = apply_pure_growth(
        ell, PureGrowthOp{{{{0, 1}, Direction::North}, {{1, 0}, Direction::East}}});
    CHECK(grown == Shape({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}}));

    CHECK_THROWS_AS(apply_pure_growth(ell, PureGrowthOp{{{{0, 0}, Direction::East}}}), OpError);
    CHECK_THROWS_AS(apply_pure_growth(ell, PureGrowthOp{{{{5, 5}, Direction::East}}}), OpError);
    CHECK_THROWS_AS(apply_pure_growth(
                        ell, PureGrowthOp{{{{0, 1}, Direction::East}, {{1, 0}, Direction::North}}}),
                    OpError);  // same target twice
    CHECK_THROWS_AS(apply_pure_growth(
                        ell, PureGrowthOp{{{{0, 1}, Direction::North}, {{0, 1}, Direction::West}}}),
                    OpError);  // one node generating twice in a step
}

TEST_CASE("rect grow doubles confined to the footprint") {
    // One column inside a 4-wide footprint doubles east three times over.
    const Rect fp{{0, 0}, 4, 2};
    Shape s = rect_shape({0, 0}, 1, 2);
    s = apply_rect_grow(s, RectGrowOp{Direction::East, {{fp, {0}}}});
    CHECK(s == rect_shape({0, 0}, 2, 2));
    s = apply_rect_grow(s, RectGrowOp{Direction::East, {{fp, {0, 1}}}});
    CHECK(s == rect_shape({0, 0}, 4, 2));
    CHECK_THROWS_AS(apply_rect_grow(s, RectGrowOp{Direction::East, {{fp, {0}}}}), OpError);
}

TEST_CASE("rect grow validates lane contents") {
    // Footprint holding two disconnected pieces of the shape is refused.
    const Shape s({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}});
    const Rect fp{{1, 0}, 2, 3};
    CHECK_THROWS_AS(apply_rect_grow(s, RectGrowOp{Direction::East, {{fp, {1}}}}), OpError);
    // Overlapping footprints are refused outright.
    CHECK_THROWS_AS(
        apply_rect_grow(s, RectGrowOp{Direction::East,
                                      {{Rect{{0, 0}, 2, 2}, {0}}, {Rect{{1, 1}, 2, 2}, {1}}}}),
        OpError);
}

TEST_CASE("rect grow leaves outside cells alone") {
    // A tail west of the footprint must not move while the inside doubles.
    const Shape s({{0, 0}, {1, 0}, {1, 1}});
    const Rect fp{{1, 0}, 1, 3};
    const Shape next = apply_rect_grow(s, RectGrowOp{Direction::North, {{fp, {0}}}});
    CHECK(next == Shape({{0, 0}, {1, 0}, {1, 1}, {1, 2}}));
}

TEST_CASE("bfs constructor: path, plus, and identity") {
    const Shape dot({{0, 0}});
    const Shape line = rect_shape({0, 0}, 4, 1);
    const Constructor path = bfs_constructor(dot, line);
    CHECK(path.steps.size() == 3);
    CHECK(replay(path).back() == line);

    const Shape plus({{1, 1}, {0, 1}, {2, 1}, {1, 0}, {1, 2}});
    const Constructor from_center = bfs_constructor(Shape({{1, 1}}), plus);
    CHECK(from_center.steps.size() == 4);  // four directions, one step each
    CHECK(replay(from_center).back() == plus);

    CHECK(bfs_constructor(plus, plus).steps.empty());
    CHECK_THROWS_AS(bfs_constructor(Shape({{9, 9}}), plus), OpError);
}

TEST_CASE("bfs constructor replays exactly with level bounds") {
    testutil::Rng rng(403);
    for (int i = 0; i < 60; ++i) {
        const Shape target = testutil::random_shape(rng, testutil::rand_int(rng, 2, 40));
        const bool from_dot = rng() % 2 == 0;
        const Shape start =
            from_dot ? Shape({target.points()[static_cast<std::size_t>(
                           testutil::rand_int(rng, 0, target.size() - 1))]})
                     : testutil::random_subshape(rng, target,
                                                 testutil::rand_int(rng, 1, target.size()));
        const Constructor c = bfs_constructor(start, target);
        const auto trace = replay(c);
        CHECK(trace.back() == target);
        CHECK(c.steps.size() <= static_cast<std::size_t>(4 * target.size()));
    }
}

TEST_CASE("baseline constructor: squares collapse to a dot plus rc phase") {
    const Shape square = rect_shape({0, 0}, 4, 4);
    const Constructor c = baseline_constructor(square);
    CHECK(c.initial.size() == 1);
    CHECK(c.steps.size() == 4);  // cols 1->2->4, rows 1->2->4
    CHECK(equal_up_to_translation(replay(c).back(), square));

    CHECK(baseline_constructor(Shape({{5, 5}})).steps.empty());
}

TEST_CASE("baseline constructor on a baseline shape is pure growth") {
    const Shape stairs = testutil::exact_staircase(6);
    const BaselineProfile prof = baseline(stairs);
    CHECK(prof.baseline == normalize(stairs));  // staircases are their own baseline
    const Constructor c = baseline_constructor(stairs);
    for (const auto& op : c.steps) CHECK(std::holds_alternative<PureGrowthOp>(op));
    CHECK(equal_up_to_translation(replay(c).back(), stairs));
}

TEST_CASE("baseline constructor replays on random shapes within bounds") {
    testutil::Rng rng(404);
    for (int i = 0; i < 50; ++i) {
        const Shape target = testutil::random_profiled_shape(
            rng, testutil::rand_int(rng, 1, 8), testutil::rand_int(rng, 1, 3));
        const Constructor c = baseline_constructor(target);
        CHECK(equal_up_to_translation(replay(c).back(), target));
        const int b = baseline(target).baseline.size();
        int log2n = 0;
        while ((1 << log2n) < target.size()) ++log2n;
        CHECK(static_cast<int>(c.steps.size()) <= 4 * b + 2 * (log2n + 1));
    }
}

TEST_CASE("partition constructor: single rectangle") {
    const Shape r = rect_shape({3, 1}, 8, 5);
    const Constructor c = partition_constructor(r);
    CHECK(replay(c).back() == r);
    CHECK(c.steps.size() == 6);  // ceil(log2 8) + ceil(log2 5)
    CHECK(partition_constructor(Shape({{2, 2}})).steps.empty());
}

TEST_CASE("partition constructor: L of two rectangles") {
    const Shape s({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}});
    const Constructor c = partition_constructor(s);
    CHECK(replay(c).back() == s);
    // Root column grown (2 steps), one seeding step, child complete.
    CHECK(c.steps.size() == 3);
}

TEST_CASE("partition constructor seeds a child with no adjacent corner") {
    // Block, one-cell bridge, then a row centered over the bridge: the row's
    // only cell adjacent to its parent is its middle, not a corner.
    const Shape s({{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1}, {4, 1}, {3, 2}, {2, 3}, {3, 3}, {4, 3}});
    const RectPartition p = min_partition(s);
    CHECK(p.rects.size() == 3);
    const Constructor c = partition_constructor(s);
    CHECK(replay(c).back() == s);
}

TEST_CASE("partition constructor replays on random shapes") {
    testutil::Rng rng(405);
    for (int i = 0; i < 40; ++i) {
        const Shape target = testutil::random_shape(rng, testutil::rand_int(rng, 1, 60));
        const Constructor c = partition_constructor(target);
        CHECK(replay(c).back() == target);

        const int h = static_cast<int>(min_partition(target).rects.size());
        int log2n = 0;
        while ((1 << log2n) < target.size()) ++log2n;
        CHECK(static_cast<int>(c.steps.size()) <= h * (2 * log2n + 6));
    }
}

TEST_CASE("three-in-line persistence under preserving ops") {
    testutil::Rng rng(406);
    for (int run = 0; run < 150; ++run) {
        Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 6));
        for (int step = 0; step < 10; ++step) {
            // Collect all 3-lines before the op.
            std::vector<std::array<GridPoint, 3>> lines;
            for (const auto& p : s.points())
                for (const GridPoint e : {GridPoint{1, 0}, GridPoint{0, 1}}) {
                    const GridPoint q = p + e, r = p + e + e;
                    if (s.contains(q) && s.contains(r)) lines.push_back({p, q, r});
                }
            const GridPoint u =
                s.points()[static_cast<std::size_t>(testutil::rand_int(rng, 0, s.size() - 1))];
            const Direction d = kAllDirections[testutil::rand_int(rng, 0, 3)];
            const NodeDoublingEffect eff = apply_node_doubling_effect(s, preserving(u, d));

            std::unordered_set<GridPoint, PointHash> moved(eff.translated.begin(),
                                                           eff.translated.end());
            std::unordered_set<GridPoint, PointHash> born(eff.generated.begin(),
                                                          eff.generated.end());
            for (const auto& line : lines) {
                // Successors: translated images plus generated fill-ins that
                // lie on the line's axis within its image span.
                const bool horiz = line[1].y == line[0].y;
                std::unordered_set<GridPoint, PointHash> succ;
                for (const auto& p : line) succ.insert(moved.count(p) ? p + unit(d) : p);
                for (const auto& g : born)
                    if ((horiz && g.y == line[0].y) || (!horiz && g.x == line[0].x))
                        succ.insert(g);
                bool has_three = false;
                for (const auto& p : succ)
                    for (const GridPoint e : {GridPoint{1, 0}, GridPoint{0, 1}})
                        if (succ.count(p + e) && succ.count(p + e + e)) has_three = true;
                CHECK(has_three);
            }
            s = eff.result;
        }
    }
}

TEST_SUITE_END();
