#include "growth/io.hpp"

#include <algorithm>
#include <sstream>

namespace growth {

using nlohmann::json;

std::string shape_to_ascii(const Shape& s) {
    const int x0 = s.min_x(), y0 = s.min_y();
    const int w = s.width(), h = s.height();
    std::vector<std::string> lines(static_cast<std::size_t>(h),
                                   std::string(static_cast<std::size_t>(w), '.'));
    for (const auto& p : s.points())
        lines[static_cast<std::size_t>(h - 1 - (p.y - y0))][static_cast<std::size_t>(p.x - x0)] =
            '#';
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

// Names connected pieces of a disconnected input for the diagnostic.
std::string describe_components(const std::vector<GridPoint>& pts) {
    std::vector<GridPoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> seen(sorted.size(), false);
    auto find_idx = [&](GridPoint p) -> int {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
        if (it == sorted.end() || *it != p) return -1;
        return static_cast<int>(it - sorted.begin());
    };
    std::ostringstream msg;
    int count = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> stack{static_cast<int>(i)};
        seen[i] = true;
        int cells = 0;
        while (!stack.empty()) {
            const int at = stack.back();
            stack.pop_back();
            ++cells;
            for (Direction d : kAllDirections) {
                const int n = find_idx(sorted[static_cast<std::size_t>(at)] + unit(d));
                if (n >= 0 && !seen[static_cast<std::size_t>(n)]) {
                    seen[static_cast<std::size_t>(n)] = true;
                    stack.push_back(n);
                }
            }
        }
        ++count;
        if (count > 1) msg << "; ";
        msg << cells << (cells == 1 ? " cell" : " cells") << " anchored at (" << sorted[i].x
            << "," << sorted[i].y << ")";
    }
    return std::to_string(count) + " components: " + msg.str();
}

}  // namespace

Shape shape_from_ascii(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::vector<GridPoint> pts;
    const int rows = static_cast<int>(lines.size());
    for (int r = 0; r < rows; ++r) {
        const std::string& line = lines[static_cast<std::size_t>(r)];
        for (int c = 0; c < static_cast<int>(line.size()); ++c) {
            const char ch = line[static_cast<std::size_t>(c)];
            if (ch == '#')
                pts.push_back({c, rows - 1 - r});
            else if (ch != '.')
                throw ParseError(std::string("unexpected character '") + ch + "' in grid", r + 1,
                                 c + 1);
        }
    }
    if (pts.empty()) throw ParseError("empty shape: no '#' cells", rows, 1);
    if (!is_connected(pts))
        throw ParseError("disconnected shape: " + describe_components(pts), 1, 1);
    std::sort(pts.begin(), pts.end());
    return Shape::unchecked(std::move(pts));
}

json shape_to_json(const Shape& s, const std::optional<std::string>& name) {
    json points = json::array();
    for (const auto& p : s.points()) points.push_back({p.x, p.y});
    json out{{"points", std::move(points)}};
    out["normalized"] = (s.min_x() == 0 && s.min_y() == 0);
    if (name) out["name"] = *name;
    return out;
}

Shape shape_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("expected an object with a \"points\" array");
    std::vector<GridPoint> pts;
    for (const auto& e : j["points"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("each point must be a [x, y] integer pair");
        pts.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    if (pts.empty()) throw ParseError("empty shape: no points");
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw ParseError("duplicate point in shape");
    if (!is_connected(pts))
        throw ParseError("disconnected shape: " + describe_components(pts));
    Shape s = Shape::unchecked(std::move(pts));
    if (j.value("normalized", false) && (s.min_x() != 0 || s.min_y() != 0))
        throw ParseError("shape marked normalized but minimum is not (0,0)");
    return s;
}

Shape shape_from_text(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return shape_from_json(parse_json(text));
    return shape_from_ascii(text);
}

namespace {

json point_json(GridPoint p) { return json{p.x, p.y}; }

GridPoint point_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("expected a [x, y] integer pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

Direction dir_from(const json& j) {
    if (j.is_string()) {
        if (auto d = direction_from(j.get<std::string>())) return *d;
    }
    throw ParseError("unknown direction " + j.dump());
}

json rect_json(const Rect& r) {
    return json{{"origin", point_json(r.origin)}, {"w", r.width}, {"h", r.height}};
}

Rect rect_from(const json& j) {
    if (!j.is_object() || !j.contains("origin") || !j.contains("w") || !j.contains("h"))
        throw ParseError("expected a rectangle object {origin, w, h}");
    Rect r{point_from(j["origin"]), j["w"].get<int>(), j["h"].get<int>()};
    if (r.width < 1 || r.height < 1) throw ParseError("rectangle sides must be positive");
    return r;
}

}  // namespace

json op_to_json(const GrowthOp& op) {
    return std::visit(
        [](const auto& o) -> json {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, FullDoublingOp>) {
                return {{"family", "full"}, {"direction", name(o.dir)}};
            } else if constexpr (std::is_same_v<T, RcOp>) {
                return {{"family", "rc"},
                        {"axis", o.axis == Axis::Column ? "column" : "row"},
                        {"direction", name(o.dir)},
                        {"indices", o.indices}};
            } else if constexpr (std::is_same_v<T, PureGrowthOp>) {
                json gens = json::array();
                for (const auto& [p, d] : o.generators)
                    gens.push_back({{"node", point_json(p)}, {"direction", name(d)}});
                return {{"family", "growth"}, {"generators", std::move(gens)}};
            } else if constexpr (std::is_same_v<T, NodeDoubleOp>) {
                json breaks = json::array();
                for (const auto& e : o.breaks)
                    breaks.push_back({point_json(e.a), point_json(e.b)});
                json out{{"family", "node"},
                         {"node", point_json(o.node)},
                         {"direction", name(o.dir)},
                         {"mode", o.mode == RigidityMode::Preserving ? "preserving" : "breaking"}};
                if (!o.breaks.empty()) out["breaks"] = std::move(breaks);
                return out;
            } else {
                static_assert(std::is_same_v<T, RectGrowOp>);
                json lanes = json::array();
                for (const auto& lane : o.lanes)
                    lanes.push_back(
                        {{"footprint", rect_json(lane.footprint)}, {"indices", lane.indices}});
                return {{"family", "node"},
                        {"mode", "breaking"},
                        {"direction", name(o.dir)},
                        {"rects", std::move(lanes)}};
            }
        },
        op);
}

GrowthOp op_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family")) throw ParseError("step missing \"family\"");
    const std::string family = j["family"].get<std::string>();
    if (family == "full") {
        return FullDoublingOp{dir_from(j.at("direction"))};
    }
    if (family == "rc") {
        const std::string axis = j.at("axis").get<std::string>();
        if (axis != "column" && axis != "row") throw ParseError("rc axis must be column or row");
        RcOp op{axis == "column" ? Axis::Column : Axis::Row, dir_from(j.at("direction")),
                j.at("indices").get<std::vector<int>>()};
        return op;
    }
    if (family == "growth") {
        PureGrowthOp op;
        for (const auto& g : j.at("generators"))
            op.generators.push_back({point_from(g.at("node")), dir_from(g.at("direction"))});
        return op;
    }
    if (family == "node") {
        if (j.contains("rects")) {
            RectGrowOp op;
            op.dir = dir_from(j.at("direction"));
            for (const auto& lane : j.at("rects"))
                op.lanes.push_back(
                    {rect_from(lane.at("footprint")), lane.at("indices").get<std::vector<int>>()});
            return op;
        }
        NodeDoubleOp op;
        op.node = point_from(j.at("node"));
        op.dir = dir_from(j.at("direction"));
        const std::string mode = j.value("mode", "preserving");
        if (mode != "preserving" && mode != "breaking")
            throw ParseError("node mode must be preserving or breaking");
        op.mode = mode == "preserving" ? RigidityMode::Preserving : RigidityMode::Breaking;
        if (j.contains("breaks"))
            for (const auto& e : j["breaks"]) {
                if (!e.is_array() || e.size() != 2) throw ParseError("break must be a point pair");
                op.breaks.push_back(GridEdge::make(point_from(e[0]), point_from(e[1])));
            }
        return op;
    }
    throw ParseError("unknown op family \"" + family + "\"");
}

json constructor_to_json(const Constructor& c) {
    json steps = json::array();
    for (const auto& op : c.steps) steps.push_back(op_to_json(op));
    return {{"initial", shape_to_json(c.initial)}, {"steps", std::move(steps)}};
}

Constructor constructor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("initial") || !j.contains("steps"))
        throw ParseError("constructor must hold \"initial\" and \"steps\"");
    Constructor c{shape_from_json(j["initial"]), {}};
    for (const auto& step : j["steps"]) c.steps.push_back(op_from_json(step));
    return c;
}

json partition_to_json(const RectPartition& p) {
    json rects = json::array();
    for (const auto& r : p.rects) rects.push_back(rect_json(r));
    return {{"rects", std::move(rects)}, {"tree", {{"root", p.root}, {"parent", p.parent}}}};
}

RectPartition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rects")) throw ParseError("partition missing \"rects\"");
    std::vector<Rect> rects;
    for (const auto& r : j["rects"]) rects.push_back(rect_from(r));
    RectPartition rebuilt = build_adjacency_and_tree(std::move(rects));
    if (j.contains("tree")) {
        rebuilt.root = j["tree"].value("root", rebuilt.root);
        if (j["tree"].contains("parent"))
            rebuilt.parent = j["tree"]["parent"].get<std::vector<int>>();
    }
    return rebuilt;
}

json trace_to_json(std::span<const Shape> frames) {
    json arr = json::array();
    for (const auto& s : frames) arr.push_back(shape_to_json(s));
    return {{"frames", std::move(arr)}};
}

std::vector<Shape> trace_from_json(const json& j) {
    if (!j.is_object() || !j.contains("frames")) throw ParseError("trace missing \"frames\"");
    std::vector<Shape> out;
    for (const auto& f : j["frames"]) out.push_back(shape_from_json(f));
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Byte offset -> line/col for the diagnostic.
        int line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(e.what(), line, col);
    }
}

}  // namespace growth
