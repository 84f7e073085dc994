#include "realsurf/pants_graph.hpp"

#include <algorithm>

#include "realsurf/errors.hpp"

namespace realsurf {

PantsGraph::Slot PantsGraph::at(int vertex, int slot) const {
    for (int e = 0; e < edge_count(); ++e) {
        if (edges[e].side0.vertex == vertex && edges[e].side0.slot == slot) return {e, 0};
        if (edges[e].side1.vertex == vertex && edges[e].side1.slot == slot) return {e, 1};
    }
    return {};
}

ValidationReport validate(const PantsGraph& graph) {
    ValidationReport report;
    const int V = graph.vertex_count;
    if (V < 2) report.issues.push_back("vertex_count must be at least 2 (got " + std::to_string(V) + ")");
    if (V % 2 != 0) report.issues.push_back("vertex_count must be even (got " + std::to_string(V) + ")");

    // Each (vertex, slot) must appear in exactly one pairing.
    std::vector<int> uses(std::max(V, 0) * 3, 0);
    bool range_ok = true;
    for (int e = 0; e < graph.edge_count(); ++e) {
        for (const HalfEdge& h : {graph.edges[e].side0, graph.edges[e].side1}) {
            if (h.vertex < 0 || h.vertex >= V || h.slot < 0 || h.slot > 2) {
                report.issues.push_back("edge " + std::to_string(e) + " references invalid half-edge " +
                                        std::to_string(h.vertex) + "." + std::to_string(h.slot));
                range_ok = false;
                continue;
            }
            ++uses[h.vertex * 3 + h.slot];
        }
        if (graph.edges[e].side0 == graph.edges[e].side1)
            report.issues.push_back("edge " + std::to_string(e) + " pairs a half-edge with itself");
    }
    if (range_ok) {
        for (int v = 0; v < V; ++v) {
            for (int s = 0; s < 3; ++s) {
                const int u = uses[v * 3 + s];
                if (u == 0)
                    report.issues.push_back("half-edge " + std::to_string(v) + "." + std::to_string(s) +
                                            " is unpaired");
                else if (u > 1)
                    report.issues.push_back("half-edge " + std::to_string(v) + "." + std::to_string(s) +
                                            " appears in " + std::to_string(u) + " pairings");
            }
        }
    }
    if (2 * graph.edge_count() != 3 * V)
        report.issues.push_back("expected 3V = 2E, got V=" + std::to_string(V) +
                                " E=" + std::to_string(graph.edge_count()));

    // Connectivity over vertices.
    if (V > 0 && report.ok()) {
        std::vector<char> seen(V, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& e : graph.edges) {
                for (const auto& [a, b] : {std::pair{e.side0, e.side1}, std::pair{e.side1, e.side0}}) {
                    if (a.vertex == v && !seen[b.vertex]) {
                        seen[b.vertex] = 1;
                        stack.push_back(b.vertex);
                    }
                }
            }
        }
        if (std::count(seen.begin(), seen.end(), 1) != V)
            report.issues.push_back("graph is not connected");
    }
    return report;
}

int genus(const PantsGraph& graph) {
    const ValidationReport report = validate(graph);
    if (!report.ok()) throw InvalidGraphError("invalid pants graph: " + report.issues.front());
    return graph.edge_count() - graph.vertex_count + 1;
}

PantsGraph chain_graph(int g) {
    if (g < 2) throw InvalidGraphError("chain_graph requires genus >= 2");
    PantsGraph graph;
    if (g == 2) {
        graph.vertex_count = 2;
        graph.edges = {{{0, 0}, {1, 0}}, {{0, 1}, {0, 2}}, {{1, 1}, {1, 2}}};
        return graph;
    }
    // Junctions 0..g-3; handle vertices q_j = (g-2)+j for j = 0..g-1.
    const int nj = g - 2;
    const int q0 = nj;
    graph.vertex_count = nj + g;
    // Path q_0 - J_0 - ... - J_{g-3} - q_{g-1}, earlier endpoint is side 0.
    graph.edges.push_back({{q0, 0}, {0, 0}});
    for (int i = 0; i + 1 < nj; ++i) graph.edges.push_back({{i, 1}, {i + 1, 0}});
    graph.edges.push_back({{nj - 1, 1}, {q0 + g - 1, 0}});
    // Hanging handle vertices q_1..q_{g-2}.
    for (int i = 0; i < nj; ++i) graph.edges.push_back({{i, 2}, {q0 + 1 + i, 0}});
    // Handle loops.
    for (int j = 0; j < g; ++j) graph.edges.push_back({{q0 + j, 1}, {q0 + j, 2}});
    return graph;
}

}  // namespace realsurf
