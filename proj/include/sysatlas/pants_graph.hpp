#pragma once

#include <string>
#include <vector>

#include <json.hpp>

// Combinatorial layer: trivalent trees, pants-decomposition gluing graphs,
// curve crossing paths, and the separating / coverage conditions used by
// the length lower bounds on the hextree surfaces.

namespace sysatlas {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rooted combinatorial tree; every non-leaf vertex has degree 3.  Vertex 0
// is the designated center (joining vertex).
struct TrivalentTree {
    std::vector<std::vector<int>> adj;
    int center = 0;

    int vertex_count() const { return static_cast<int>(adj.size()); }
    int leaf_count() const;
    std::vector<int> leaves() const;
    // BFS distances from the center to every vertex.
    std::vector<int> center_distances() const;
    int min_center_to_leaf() const;

    void validate() const; // connected, acyclic, internal degree == 3

    nlohmann::json to_json() const;
};

// Three full binary trees of depth n joined at their roots by a center
// vertex: 3(2^n - 1) + 1 vertices and 3 * 2^(n-1) leaves.
TrivalentTree build_joined_tree(int n);

// A trivalent tree with exactly g leaves containing the joined tree of the
// unique n with 3*2^(n-1) <= g < 3*2^n.  Leaves of the joined tree are
// expanded into cherries breadth-first, left to right, until the leaf
// count reaches g, so the output is deterministic.
TrivalentTree build_tree_for_genus(int g);

// Pants-decomposition multigraph.  Vertices are pairs of pants with three
// cuff slots (1..3); edges glue two slots and carry (length, twist).
// Self-loops are the handle edges of one-holed tori.
struct GluingGraph {
    struct Edge {
        int pants_a = 0;
        int slot_a = 1;
        int pants_b = 0;
        int slot_b = 1;
        double length = 0.0;
        double twist = 0.0;
        bool self_loop() const { return pants_a == pants_b; }
    };

    int pants_count = 0;
    std::vector<Edge> edges;
    int center_pants = 0;

    void validate() const; // every slot matched exactly once

    int leaf_handle_count() const;
    // genus = #edges - #pants + 1 for a connected gluing graph
    int genus() const;

    nlohmann::json to_json() const;
    static GluingGraph from_json(const nlohmann::json& j);
};

// Surface built on a trivalent tree: one pair of pants per vertex, cuffs
// glued along tree edges, and the two free cuffs of each leaf pants glued
// to each other (a handle).  Every cuff has length 2*arccosh(2), twist 0,
// so each pants is a pair of regular right-angled hexagons.
GluingGraph surface_from_tree(const TrivalentTree& tree);

// Closed curve recorded as its sequence of cuff crossings.  Each crossing
// names the edge and the pants entered; consecutive crossings must share
// the pants that was entered.
struct CurvePath {
    struct Crossing {
        int edge = 0;
        int entered_pants = 0;
    };
    std::vector<Crossing> crossings;
    bool closed = true;

    void validate(const GluingGraph& g) const;
};

// True when the closed path crosses no leaf-handle edge, so it lies in the
// complement of the handles (a g-holed sphere) and is certified
// separating.  False only means: not certified by this criterion.
bool separating_check(const GluingGraph& g, const CurvePath& p);

// Necessary condition for a filling curve set: every pants is visited.
struct CoverageResult {
    bool covers_all_pants = false;
    std::vector<int> missed;
};
CoverageResult coverage_check(const GluingGraph& g, const std::vector<CurvePath>& ps);

// (graph distance from the center pants to the nearest leaf pants) *
// arccosh(2): a length lower bound for non-separating curves through the
// center pants of a tree surface.
double min_length_through_center(const GluingGraph& g);

} // namespace sysatlas
