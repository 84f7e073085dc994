#pragma once

#include <array>
#include <string>
#include <vector>

namespace realsurf {

// One boundary circle of one pair of pants: pants index and slot in {0,1,2}.
// The slot order is the reference for seam labels and feet coordinates: on the
// circle at slot k, the foot of seam s_{(k+1)%3} sits at coordinate 0 and the
// foot of s_{(k+2)%3} at L/2.
struct HalfEdge {
    int vertex = -1;
    int slot = -1;

    bool operator==(const HalfEdge& o) const { return vertex == o.vertex && slot == o.slot; }
};

// Trivalent multigraph of pants. Each edge pairs two half-edges; the first one
// is the designated "side 0", which twist conventions attach to. Self-pairings
// (both sides on one vertex, distinct slots) and multi-edges are allowed.
struct PantsGraph {
    struct Edge {
        HalfEdge side0;
        HalfEdge side1;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }

    // Location of a half-edge: edge index and side (0 or 1).
    struct Slot {
        int edge = -1;
        int side = -1;
    };

    // Lookup (vertex, slot) -> (edge, side). Valid only on complete pairings.
    Slot at(int vertex, int slot) const;

    HalfEdge other_end(int edge, int side) const {
        return side == 0 ? edges[edge].side1 : edges[edge].side0;
    }
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// Total function: every violated invariant is reported, nothing is thrown.
ValidationReport validate(const PantsGraph& graph);

// g = E - V + 1; requires a valid graph (throws InvalidGraphError otherwise).
int genus(const PantsGraph& graph);

// Chain-of-handles graph on 2g-2 vertices: g handle vertices whose slots 1,2
// are self-paired, hanging off a path of g-2 trivalent junctions (for g = 2
// the two handle vertices are joined directly). Used by the genus-g example
// generators; the layout is this library's reading of the usual picture.
PantsGraph chain_graph(int g);

}  // namespace realsurf
