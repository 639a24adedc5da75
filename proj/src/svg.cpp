#include "growth/svg.hpp"

#include <sstream>

namespace growth {

std::string render_svg_frame(const Shape& current, const Shape* previous, const Shape& bounds) {
    constexpr int cell = 20;
    constexpr int pad = 10;
    const int x0 = bounds.min_x(), y0 = bounds.min_y();
    const int w = bounds.width(), h = bounds.height();
    const int cw = w * cell + 2 * pad;
    const int ch = h * cell + 2 * pad;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cw << "\" height=\"" << ch
        << "\" viewBox=\"0 0 " << cw << " " << ch << "\">\n";
    svg << "  <rect width=\"" << cw << "\" height=\"" << ch << "\" fill=\"white\"/>\n";

    for (const auto& p : current.points()) {
        const int px = pad + (p.x - x0) * cell;
        const int py = pad + (h - 1 - (p.y - y0)) * cell;  // svg y grows downward
        const bool fresh = previous != nullptr && !previous->contains(p);
        svg << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\""
            << cell << "\" fill=\"" << (fresh ? "#9e9e9e" : "#1a1a1a")
            << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
    }

    // Light grid over the canvas.
    for (int gx = 0; gx <= w; ++gx)
        svg << "  <line x1=\"" << pad + gx * cell << "\" y1=\"" << pad << "\" x2=\""
            << pad + gx * cell << "\" y2=\"" << pad + h * cell
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    for (int gy = 0; gy <= h; ++gy)
        svg << "  <line x1=\"" << pad << "\" y1=\"" << pad + gy * cell << "\" x2=\""
            << pad + w * cell << "\" y2=\"" << pad + gy * cell
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace growth
