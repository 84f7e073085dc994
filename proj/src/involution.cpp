#include "realsurf/involution.hpp"

#include <numeric>

#include "realsurf/errors.hpp"

namespace realsurf {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
    int component_count() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }
};

}  // namespace

bool Involution::is_involution() const {
    for (int h = 0; h < hexagon_count(); ++h) {
        const int image = hexagon_map[h];
        if (image < 0 || image >= hexagon_count() || hexagon_map[image] != h) return false;
    }
    return true;
}

bool Involution::reverses_orientation() const {
    for (int h = 0; h < hexagon_count(); ++h) {
        const int image = hexagon_map[h];
        // Same pants, opposite chirality bit.
        if (image / 2 != h / 2 || image % 2 == h % 2) return false;
    }
    return true;
}

Involution build_involution(const FNSurface& surface) {
    if (!is_real(surface)) throw NotRealError("twists must all be 0 or 1/2 to build the involution");

    const PantsGraph& graph = surface.graph;
    const int V = graph.vertex_count;

    Involution sigma;
    sigma.hexagon_map.resize(2 * V);
    for (int v = 0; v < V; ++v) {
        sigma.hexagon_map[2 * v] = 2 * v + 1;
        sigma.hexagon_map[2 * v + 1] = 2 * v;
    }

    // Consistency of the induced boundary maps: on each circle the hexagon
    // swap acts by x -> -x mod L (fixing the two feet). Transporting across
    // the gluing x1 = (t + 1/2)L - x0 gives x1 -> (2t + 1)L - x1, which equals
    // -x1 mod L exactly when 2t is an integer.
    for (int e = 0; e < graph.edge_count(); ++e) {
        const Rational twice = (surface.twist[e] + surface.twist[e]).mod1();
        if (!twice.is_zero())
            throw FeetMismatchError("boundary involutions disagree across edge " + std::to_string(e));
    }

    sigma.fixed_set = trace_fixed_curves(surface);

    sigma.invariant_edges.resize(graph.edge_count());
    std::iota(sigma.invariant_edges.begin(), sigma.invariant_edges.end(), 0);

    // Complement of the fixed set: hexagons glued along open boundary-half
    // arcs. At t = 0 the gluing matches same-chirality hexagons, at t = 1/2
    // opposite ones.
    UnionFind uf(2 * V);
    for (int e = 0; e < graph.edge_count(); ++e) {
        const int v0 = graph.edges[e].side0.vertex;
        const int v1 = graph.edges[e].side1.vertex;
        if (surface.twist[e].is_zero()) {
            uf.unite(2 * v0, 2 * v1);
            uf.unite(2 * v0 + 1, 2 * v1 + 1);
        } else {
            uf.unite(2 * v0, 2 * v1 + 1);
            uf.unite(2 * v0 + 1, 2 * v1);
        }
    }
    sigma.component_count = uf.component_count();
    return sigma;
}

RealFormClass classify_real_form(const FNSurface& surface) {
    const Involution sigma = build_involution(surface);
    RealFormClass cls;
    cls.genus = genus(surface.graph);
    cls.n = sigma.fixed_set.n();
    cls.separating = sigma.component_count == 2;
    cls.parity_ok = !cls.separating || ((cls.genus - cls.n) % 2 != 0);
    return cls;
}

}  // namespace realsurf
