#include "psit/svg.hpp"

#include <algorithm>
#include <sstream>

namespace psit {

namespace {

constexpr int kCanvas = 800;
constexpr int kMargin = 40;

struct Mapper {
    std::int64_t minx, miny;
    double scale;
    int map_x(std::int64_t x) const {
        return kMargin + static_cast<int>((static_cast<double>(x - minx)) * scale + 0.5);
    }
    int map_y(std::int64_t y) const {
        // SVG y grows downward.
        return kCanvas - kMargin - static_cast<int>((static_cast<double>(y - miny)) * scale + 0.5);
    }
};

} // namespace

std::string emit_svg(const PlaneGraph& g, const SvgOptions& opts) {
    const PointSet& ps = *g.ps;
    std::int64_t minx = ps.points[0].x, maxx = minx, miny = ps.points[0].y, maxy = miny;
    for (const Point& p : ps.points) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double span = static_cast<double>(std::max<std::int64_t>({maxx - minx, maxy - miny, 1}));
    const Mapper m{minx, miny, (kCanvas - 2.0 * kMargin) / span};

    std::vector<char> pointed(static_cast<std::size_t>(ps.size()), 0);
    if (opts.mark_pointed) {
        const Classification c = classify(g);
        for (int v : c.pointed_interior) pointed[static_cast<std::size_t>(v)] = 1;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
        << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
    for (const Edge& e : g.edges)
        out << "  <line x1=\"" << m.map_x(ps.pt(e.a).x) << "\" y1=\"" << m.map_y(ps.pt(e.a).y)
            << "\" x2=\"" << m.map_x(ps.pt(e.b).x) << "\" y2=\"" << m.map_y(ps.pt(e.b).y)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const Edge& e : opts.removed)
        out << "  <line x1=\"" << m.map_x(ps.pt(e.a).x) << "\" y1=\"" << m.map_y(ps.pt(e.a).y)
            << "\" x2=\"" << m.map_x(ps.pt(e.b).x) << "\" y2=\"" << m.map_y(ps.pt(e.b).y)
            << "\" stroke=\"red\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    for (const Point& p : ps.points)
        out << "  <circle cx=\"" << m.map_x(p.x) << "\" cy=\"" << m.map_y(p.y)
            << "\" r=\"5\" fill=\"" << (pointed[static_cast<std::size_t>(p.id)] ? "orange" : "navy")
            << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace psit
