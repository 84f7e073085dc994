#include "realsurf/multicurve.hpp"

#include <map>

#include "realsurf/errors.hpp"

namespace realsurf {

namespace {

// A seam foot: boundary circle (vertex, slot) plus the coordinate fraction,
// which is 0 or 1/2 on a real surface.
struct Foot {
    int vertex;
    int slot;
    Rational coord;

    bool operator<(const Foot& o) const {
        if (vertex != o.vertex) return vertex < o.vertex;
        if (slot != o.slot) return slot < o.slot;
        return coord < o.coord;
    }
    bool operator==(const Foot& o) const {
        return vertex == o.vertex && slot == o.slot && coord == o.coord;
    }
};

SeamRef seam_of_foot(const Foot& f) {
    // Coordinate 0 carries the foot of s_{slot+1}, coordinate 1/2 of s_{slot+2}.
    const int seam = f.coord.is_zero() ? SeamSet::seam_at_origin(f.slot) : SeamSet::seam_at_half(f.slot);
    return {f.vertex, seam};
}

// The two feet of seam (v, m): on slot m+2 at coordinate 0, on slot m+1 at 1/2.
std::pair<Foot, Foot> feet_of_seam(const SeamRef& s) {
    return {Foot{s.vertex, (s.seam + 2) % 3, Rational(0)},
            Foot{s.vertex, (s.seam + 1) % 3, Rational(1, 2)}};
}

}  // namespace

double Multicurve::total_length() const {
    double total = 0.0;
    for (const auto& c : curves) total += c.length;
    return total;
}

Multicurve trace_fixed_curves(const FNSurface& surface) {
    if (!is_real(surface)) throw NotRealError("twists must all be 0 or 1/2 to trace fixed curves");

    const PantsGraph& graph = surface.graph;
    const Rational half(1, 2);

    // Feet matching across every edge: x1 = (t + 1/2 - x0) mod 1 in length
    // fractions. On a real surface both feet of each circle land on feet of
    // the opposite circle.
    struct Match {
        Foot foot;
        int edge;
    };
    std::map<Foot, Match> matched;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const HalfEdge s0 = graph.edges[e].side0;
        const HalfEdge s1 = graph.edges[e].side1;
        for (const Rational& x0 : {Rational(0), half}) {
            const Rational x1 = (surface.twist[e] + half - x0).mod1();
            if (!(x1.is_zero() || x1 == half))
                throw FeetMismatchError("matched coordinate " + x1.str() + " is not a foot");
            const Foot a{s0.vertex, s0.slot, x0};
            const Foot b{s1.vertex, s1.slot, x1};
            if (matched.count(a) || matched.count(b))
                throw FeetMismatchError("foot matched twice across edge " + std::to_string(e));
            matched[a] = {b, e};
            matched[b] = {a, e};
        }
    }

    const SeamSet seams = seam_set(surface);

    std::map<SeamRef, bool> used;
    for (int v = 0; v < graph.vertex_count; ++v)
        for (int m = 0; m < 3; ++m) used[{v, m}] = false;

    Multicurve result;
    std::vector<int> edge_crossings(graph.edge_count(), 0);

    for (auto& [start, start_used] : used) {
        if (start_used) continue;
        start_used = true;

        Curve curve;
        curve.seams.push_back(start);
        curve.length += seams.pants[start.vertex].seam_length[start.seam];

        // Leave through the lower-coordinate foot first.
        Foot foot = feet_of_seam(start).first;
        while (true) {
            const auto it = matched.find(foot);
            if (it == matched.end()) throw FeetMismatchError("unmatched foot encountered");
            const Match& m = it->second;
            ++edge_crossings[m.edge];
            const Foot side0_foot = foot.vertex == graph.edges[m.edge].side0.vertex &&
                                            foot.slot == graph.edges[m.edge].side0.slot
                                        ? foot
                                        : m.foot;
            curve.crossings.push_back({m.edge, side0_foot.coord});

            const SeamRef next = seam_of_foot(m.foot);
            if (next == start) break;
            if (used[next]) throw FeetMismatchError("seam revisited before cycle closed");
            used[next] = true;
            curve.seams.push_back(next);
            curve.length += seams.pants[next.vertex].seam_length[next.seam];

            const auto [f0, f1] = feet_of_seam(next);
            foot = (f0 == m.foot) ? f1 : f0;
        }
        result.curves.push_back(std::move(curve));
    }

    for (int e = 0; e < graph.edge_count(); ++e)
        if (edge_crossings[e] != 2)
            throw FeetMismatchError("edge " + std::to_string(e) + " crossed " +
                                    std::to_string(edge_crossings[e]) + " times, expected 2");
    const int g = genus(graph);
    if (result.n() < 1 || result.n() > g + 1)
        throw FeetMismatchError("curve count " + std::to_string(result.n()) +
                                " violates 1 <= n <= g+1");
    return result;
}

}  // namespace realsurf
