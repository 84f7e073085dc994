#include "realsurf/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "realsurf/multicurve.hpp"

namespace realsurf {

namespace {

struct XY {
    double x, y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

constexpr double kTau = 6.283185307179586;
constexpr double kSize = 900.0;
constexpr double kRing = 330.0;

XY vertex_pos(int v, int V) {
    const double phi = kTau * v / V - kTau / 4.0;
    return {kSize / 2.0 + kRing * std::cos(phi), kSize / 2.0 + kRing * std::sin(phi)};
}

XY slot_anchor(int v, int slot, int V) {
    const XY p = vertex_pos(v, V);
    const double phi = kTau * v / V - kTau / 4.0 + kTau / 2.0 + slot * kTau / 3.0;
    return {p.x + 34.0 * std::cos(phi), p.y + 34.0 * std::sin(phi)};
}

XY seam_marker(int v, int seam, int V) {
    const XY p = vertex_pos(v, V);
    const double phi = kTau * v / V - kTau / 4.0 + kTau / 2.0 + (seam + 0.5) * kTau / 3.0;
    return {p.x + 16.0 * std::cos(phi), p.y + 16.0 * std::sin(phi)};
}

struct EdgePath {
    XY a, c1, c2, b;  // cubic control polygon
    XY at(double s) const {
        const double t = s, u = 1.0 - s;
        return {u * u * u * a.x + 3 * u * u * t * c1.x + 3 * u * t * t * c2.x + t * t * t * b.x,
                u * u * u * a.y + 3 * u * u * t * c1.y + 3 * u * t * t * c2.y + t * t * t * b.y};
    }
};

EdgePath edge_path(const FNSurface& surface, int e) {
    const int V = surface.graph.vertex_count;
    const HalfEdge h0 = surface.graph.edges[e].side0;
    const HalfEdge h1 = surface.graph.edges[e].side1;
    const XY a = slot_anchor(h0.vertex, h0.slot, V);
    const XY b = slot_anchor(h1.vertex, h1.slot, V);
    if (h0.vertex == h1.vertex) {
        // Self-gluing drawn as a petal away from the vertex.
        const XY p = vertex_pos(h0.vertex, V);
        const double out = std::atan2(0.5 * (a.y + b.y) - p.y, 0.5 * (a.x + b.x) - p.x);
        const XY c1{a.x + 95.0 * std::cos(out - 0.5), a.y + 95.0 * std::sin(out - 0.5)};
        const XY c2{b.x + 95.0 * std::cos(out + 0.5), b.y + 95.0 * std::sin(out + 0.5)};
        return {a, c1, c2, b};
    }
    const XY mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    const XY center{kSize / 2.0, kSize / 2.0};
    // Bow multi-edges apart with an edge-index-dependent pull.
    const double pull = 0.18 + 0.12 * (e % 3);
    const XY c{mid.x + (center.x - mid.x) * pull, mid.y + (center.y - mid.y) * pull};
    return {a, {c.x, c.y}, {c.x, c.y}, b};
}

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999"};

}  // namespace

std::string render_svg(const FNSurface& surface) {
    const int V = surface.graph.vertex_count;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"900\" height=\"900\" "
           "viewBox=\"0 0 900 900\">\n";
    out << "<rect width=\"900\" height=\"900\" fill=\"#ffffff\"/>\n";

    out << "<g id=\"edges\" fill=\"none\" stroke=\"#444444\" stroke-width=\"2\">\n";
    for (int e = 0; e < surface.graph.edge_count(); ++e) {
        const EdgePath path = edge_path(surface, e);
        out << "<path d=\"M " << num(path.a.x) << " " << num(path.a.y) << " C " << num(path.c1.x)
            << " " << num(path.c1.y) << " " << num(path.c2.x) << " " << num(path.c2.y) << " "
            << num(path.b.x) << " " << num(path.b.y) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g id=\"edge-labels\" font-family=\"monospace\" font-size=\"13\" fill=\"#222222\">\n";
    for (int e = 0; e < surface.graph.edge_count(); ++e) {
        const EdgePath path = edge_path(surface, e);
        const XY label = path.at(0.5);
        char text[96];
        std::snprintf(text, sizeof(text), "e%d (%.4g, %s)", e, surface.length[e],
                      surface.twist[e].str().c_str());
        out << "<text x=\"" << num(label.x) << "\" y=\"" << num(label.y - 6.0) << "\">" << text
            << "</text>\n";
    }
    out << "</g>\n";

    out << "<g id=\"vertices\">\n";
    for (int v = 0; v < V; ++v) {
        const XY p = vertex_pos(v, V);
        out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
            << "\" r=\"24\" fill=\"#f2f2f2\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y + 5.0)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"15\">v" << v
            << "</text>\n";
    }
    out << "</g>\n";

    if (is_real(surface)) {
        const Multicurve curves = trace_fixed_curves(surface);
        out << "<g id=\"fixed-curves\" fill=\"none\" stroke-width=\"2.5\">\n";
        for (int i = 0; i < curves.n(); ++i) {
            const Curve& curve = curves.curves[i];
            std::ostringstream points;
            for (std::size_t k = 0; k < curve.seams.size(); ++k) {
                const SeamRef seam = curve.seams[k];
                const XY m = seam_marker(seam.vertex, seam.seam, V);
                points << num(m.x) << "," << num(m.y) << " ";
                const Crossing crossing = curve.crossings[k];
                const EdgePath path = edge_path(surface, crossing.edge);
                const XY c = path.at(crossing.side0_coord.is_zero() ? 0.42 : 0.58);
                points << num(c.x) << "," << num(c.y);
                if (k + 1 < curve.seams.size()) points << " ";
            }
            out << "<polygon class=\"fixed-curve\" stroke=\"" << kPalette[i % 8] << "\" points=\""
                << points.str() << "\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace realsurf
