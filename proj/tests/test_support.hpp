#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "realsurf/fn_surface.hpp"
#include "realsurf/pants_graph.hpp"

namespace realsurf::test {

// Random connected trivalent multigraph on 2g-2 vertices: uniform pairing of
// the half-edges, resampled until connected.
inline PantsGraph random_pants_graph(int g, std::mt19937_64& rng) {
    const int V = 2 * g - 2;
    while (true) {
        std::vector<HalfEdge> halves;
        for (int v = 0; v < V; ++v)
            for (int s = 0; s < 3; ++s) halves.push_back({v, s});
        std::shuffle(halves.begin(), halves.end(), rng);
        PantsGraph graph;
        graph.vertex_count = V;
        for (std::size_t i = 0; i < halves.size(); i += 2)
            graph.edges.push_back({halves[i], halves[i + 1]});
        if (validate(graph).ok()) return graph;
    }
}

inline FNSurface random_real_surface(int g, std::mt19937_64& rng, double min_len = 0.5,
                                     double max_len = 6.0) {
    FNSurface surface;
    surface.graph = random_pants_graph(g, rng);
    std::uniform_real_distribution<double> len(min_len, max_len);
    for (int e = 0; e < surface.graph.edge_count(); ++e) {
        surface.length.push_back(len(rng));
        surface.twist.push_back(rng() & 1 ? Rational(1, 2) : Rational(0));
    }
    return surface;
}

inline FNSurface chain_surface(int g, const Rational& twist, double length = 2.0) {
    FNSurface surface;
    surface.graph = chain_graph(g);
    surface.length.assign(surface.graph.edge_count(), length);
    surface.twist.assign(surface.graph.edge_count(), twist);
    return surface;
}

inline FNSurface theta_surface(double l0, double l1, double l2, const Rational& twist) {
    FNSurface surface;
    surface.graph.vertex_count = 2;
    surface.graph.edges = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
    surface.length = {l0, l1, l2};
    surface.twist.assign(3, twist);
    return surface;
}

}  // namespace realsurf::test
