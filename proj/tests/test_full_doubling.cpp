#include <doctest.h>

#include <algorithm>

#include "growth/full_doubling.hpp"
#include "support.hpp"

using namespace growth;

TEST_SUITE_BEGIN("full-doubling");

TEST_CASE("east doubling of a two-column shape") {
    // Columns {0,1} and {1}: column 0 stays and copies east; column 1 shifts
    // east by one and copies at its new east side.
    const Shape s({{0, 0}, {0, 1}, {1, 1}});
    const Shape want({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(apply_full_doubling(s, Direction::East) == want);
}

TEST_CASE("singleton doubles to a domino") {
    CHECK(apply_full_doubling(Shape({{0, 0}}), Direction::East) == Shape({{0, 0}, {1, 0}}));
}

TEST_CASE("horizontal line doubles north to a square") {
    CHECK(apply_full_doubling(Shape({{0, 0}, {1, 0}}), Direction::North) ==
          Shape({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("cardinality always doubles") {
    testutil::Rng rng(101);
    for (int i = 0; i < 40; ++i) {
        const Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 25));
        for (Direction d : kAllDirections) {
            const Shape r = apply_full_doubling(s, d);
            CHECK(r.size() == 2 * s.size());
            CHECK(is_connected(r.points()));
        }
    }
}

TEST_CASE("west and south mirror east and north") {
    testutil::Rng rng(102);
    for (int i = 0; i < 30; ++i) {
        const Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 15));
        // West on s equals mirrored east on the mirrored shape.
        std::vector<GridPoint> mir;
        for (const auto& p : s.points()) mir.push_back({-p.x, p.y});
        std::sort(mir.begin(), mir.end());
        const Shape ms(mir);
        const Shape me = apply_full_doubling(ms, Direction::East);
        std::vector<GridPoint> back;
        for (const auto& p : me.points()) back.push_back({-p.x, p.y});
        std::sort(back.begin(), back.end());
        CHECK(Shape(back) == apply_full_doubling(s, Direction::West));
    }
}

TEST_CASE("reconfigure identity and node offsets") {
    const Shape s({{0, 0}, {1, 0}, {2, 0}, {2, 1}});
    CHECK(reconfigure(s, {0, 0}) == s);

    // Node with two columns west and one row south, l=3, k=2: lands at
    // (x+14, y+3) and anchors an 8x4 rectangle.
    const Shape big = reconfigure(s, {3, 2});
    CHECK(big.size() == s.size() * 32);
    CHECK(big.contains({2 + 14, 1 + 3}));
    for (const auto& c : Rect{{16, 4}, 8, 4}.cells()) CHECK(big.contains(c));
}

TEST_CASE("reconfigure of a singleton is a rectangle") {
    const Shape dot({{3, 5}});
    CHECK(equal_up_to_translation(reconfigure(dot, {2, 1}), rect_shape({0, 0}, 4, 2)));
}

TEST_CASE("additivity of reconfiguration") {
    testutil::Rng rng(103);
    for (int i = 0; i < 60; ++i) {
        const Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 20));
        const FullDoublingCounts c1{testutil::rand_int(rng, 0, 2), testutil::rand_int(rng, 0, 2)};
        const FullDoublingCounts c2{testutil::rand_int(rng, 0, 2), testutil::rand_int(rng, 0, 2)};
        CHECK(reconfigure(reconfigure(s, c1), c2) ==
              reconfigure(s, {c1.horizontal + c2.horizontal, c1.vertical + c2.vertical}));
    }
}

TEST_CASE("doubling sequences realize the reconfiguration function") {
    testutil::Rng rng(104);
    for (int i = 0; i < 60; ++i) {
        const Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 15));
        const int l = testutil::rand_int(rng, 0, 3);
        const int k = testutil::rand_int(rng, 0, 3);
        std::vector<Direction> ops(static_cast<std::size_t>(l), Direction::East);
        ops.insert(ops.end(), static_cast<std::size_t>(k), Direction::North);
        std::shuffle(ops.begin(), ops.end(), rng);
        Shape cur = s;
        for (Direction d : ops) cur = apply_full_doubling(cur, d);
        CHECK(equal_up_to_translation(cur, reconfigure(s, {l, k})));
    }
}

TEST_CASE("single east and north steps agree with the closed form") {
    testutil::Rng rng(105);
    for (int i = 0; i < 40; ++i) {
        const Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 20));
        CHECK(equal_up_to_translation(apply_full_doubling(s, Direction::East),
                                      reconfigure(s, {1, 0})));
        CHECK(equal_up_to_translation(apply_full_doubling(s, Direction::North),
                                      reconfigure(s, {0, 1})));
    }
}

TEST_CASE("rectangle law from a singleton") {
    testutil::Rng rng(106);
    const Shape dot({{0, 0}});
    for (int l = 0; l <= 4; ++l)
        for (int k = 0; k <= 4; ++k) {
            std::vector<Direction> ops;
            for (int i = 0; i < l; ++i)
                ops.push_back(rng() % 2 ? Direction::East : Direction::West);
            for (int i = 0; i < k; ++i)
                ops.push_back(rng() % 2 ? Direction::North : Direction::South);
            std::shuffle(ops.begin(), ops.end(), rng);
            Shape cur = dot;
            for (Direction d : ops) cur = apply_full_doubling(cur, d);
            CHECK(equal_up_to_translation(cur, rect_shape({0, 0}, 1 << l, 1 << k)));
        }
}

TEST_CASE("reach_full_doubling") {
    const Shape dot({{0, 0}});
    CHECK(reach_full_doubling(dot, rect_shape({0, 0}, 4, 2)) == FullDoublingCounts{2, 1});
    const Shape s({{0, 0}, {0, 1}, {1, 0}});
    CHECK(reach_full_doubling(s, s) == FullDoublingCounts{0, 0});
    CHECK_FALSE(reach_full_doubling(dot, Shape({{0, 0}, {1, 0}, {1, 1}})).has_value());
}

TEST_CASE("reach_full_doubling finds arbitrary shapes") {
    testutil::Rng rng(107);
    for (int i = 0; i < 30; ++i) {
        const Shape s = testutil::random_shape(rng, testutil::rand_int(rng, 1, 12));
        const FullDoublingCounts c{testutil::rand_int(rng, 0, 3), testutil::rand_int(rng, 0, 3)};
        const auto found = reach_full_doubling(s, reconfigure(s, c));
        REQUIRE(found.has_value());
        // Size and width force the answer, so it must match exactly.
        CHECK(*found == c);
    }
}

TEST_SUITE_END();
