#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "growth/errors.hpp"

namespace growth {

struct GridPoint {
    int x = 0;  // column index, east = +x
    int y = 0;  // row index, north = +y
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }
inline GridPoint operator-(GridPoint a, GridPoint b) { return {a.x - b.x, a.y - b.y}; }

enum class Direction { North, East, South, West };

GridPoint unit(Direction d);
Direction opposite(Direction d);
bool is_horizontal(Direction d);
std::string_view name(Direction d);
std::optional<Direction> direction_from(std::string_view s);

inline constexpr Direction kAllDirections[] = {Direction::North, Direction::East,
                                               Direction::South, Direction::West};

// A connected set of grid nodes under 4-adjacency. Points are kept sorted
// and unique; the set is never empty. Immutable after construction.
class Shape {
public:
    // Validates: deduplicates, rejects empty or disconnected input.
    explicit Shape(std::vector<GridPoint> pts);

    // Fast path for points already sorted, unique and known connected.
    static Shape unchecked(std::vector<GridPoint> sorted_unique);

    const std::vector<GridPoint>& points() const { return pts_; }
    int size() const { return static_cast<int>(pts_.size()); }
    bool contains(GridPoint p) const;

    int min_x() const;
    int min_y() const;
    int max_x() const;
    int max_y() const;
    int width() const { return max_x() - min_x() + 1; }
    int height() const { return max_y() - min_y() + 1; }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    Shape() = default;
    std::vector<GridPoint> pts_;
};

struct ShapeHash {
    std::size_t operator()(const Shape& s) const;
};

struct PointHash {
    std::size_t operator()(GridPoint p) const {
        std::uint64_t v = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
                          static_cast<std::uint32_t>(p.y);
        v *= 0x9e3779b97f4a7c15ull;
        return static_cast<std::size_t>(v ^ (v >> 32));
    }
};

// Axis-aligned rectangle of cells; origin is the southwest corner.
struct Rect {
    GridPoint origin;
    int width = 1;
    int height = 1;

    int area() const { return width * height; }
    int east_x() const { return origin.x + width - 1; }
    int north_y() const { return origin.y + height - 1; }
    bool contains(GridPoint p) const {
        return p.x >= origin.x && p.x <= east_x() && p.y >= origin.y && p.y <= north_y();
    }
    std::vector<GridPoint> cells() const;
    friend bool operator==(const Rect&, const Rect&) = default;
};

// The (p,q)-rectangle of cells anchored at u.
Shape rect_shape(GridPoint u, int p, int q);

Shape translate(const Shape& s, Direction d, int k);
Shape translated(const Shape& s, int dx, int dy);

std::vector<GridPoint> column(const Shape& s, int x);
std::vector<GridPoint> row(const Shape& s, int y);

// Number of occupied columns strictly west (rows strictly south) of u.
// For a connected shape this equals u.x - min_x (u.y - min_y).
int west_offset(const Shape& s, GridPoint u);
int south_offset(const Shape& s, GridPoint u);

bool is_connected(std::span<const GridPoint> pts);

// Translate so that min x = 0 and min y = 0.
Shape normalize(const Shape& s);

bool equal_up_to_translation(const Shape& a, const Shape& b);

}  // namespace growth
