#include "sysatlas/pants_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace sysatlas {

int TrivalentTree::leaf_count() const {
    return static_cast<int>(leaves().size());
}

std::vector<int> TrivalentTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (adj[v].size() == 1) out.push_back(v);
    return out;
}

std::vector<int> TrivalentTree::center_distances() const {
    std::vector<int> dist(vertex_count(), -1);
    std::deque<int> q{center};
    dist[center] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

int TrivalentTree::min_center_to_leaf() const {
    auto dist = center_distances();
    int best = -1;
    for (int v : leaves())
        if (best < 0 || dist[v] < best) best = dist[v];
    return best;
}

void TrivalentTree::validate() const {
    if (vertex_count() == 0) throw GraphError("empty tree");
    int m = vertex_count(), e2 = 0;
    auto dist = center_distances();
    for (int v = 0; v < m; ++v) {
        e2 += static_cast<int>(adj[v].size());
        if (dist[v] < 0) throw GraphError("tree is not connected");
        if (adj[v].size() != 1 && adj[v].size() != 3)
            throw GraphError("non-leaf vertex of degree != 3");
    }
    if (e2 != 2 * (m - 1)) throw GraphError("edge count does not match a tree");
}

nlohmann::json TrivalentTree::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj[v])
            if (v < w) edges.push_back({v, w});
    return {{"vertices", vertex_count()},
            {"center", center},
            {"edges", edges},
            {"leaves", leaves()},
            {"min_center_to_leaf", min_center_to_leaf()}};
}

TrivalentTree build_joined_tree(int n) {
    if (n < 1) throw GraphError("joined tree needs depth n >= 1");
    TrivalentTree t;
    t.adj.emplace_back(); // center = 0
    t.center = 0;
    // three full binary trees of depth n hanging off the center
    for (int b = 0; b < 3; ++b) {
        int root = static_cast<int>(t.adj.size());
        t.adj.emplace_back();
        t.adj[0].push_back(root);
        t.adj[root].push_back(0);
        std::deque<std::pair<int, int>> q{{root, 1}}; // (vertex, depth)
        while (!q.empty()) {
            auto [v, d] = q.front();
            q.pop_front();
            if (d == n) continue;
            for (int c = 0; c < 2; ++c) {
                int w = static_cast<int>(t.adj.size());
                t.adj.emplace_back();
                t.adj[v].push_back(w);
                t.adj[w].push_back(v);
                q.emplace_back(w, d + 1);
            }
        }
    }
    t.validate();
    return t;
}

TrivalentTree build_tree_for_genus(int g) {
    if (g < 3) throw GraphError("tree surface needs genus >= 3");
    int n = 1;
    while (3 * (1 << n) <= g) ++n; // 3*2^(n-1) <= g < 3*2^n
    TrivalentTree t = build_joined_tree(n);
    // expand leaves breadth-first (in vertex order, which is BFS order per
    // subtree) into cherries until we have g leaves
    std::deque<int> frontier;
    for (int v : t.leaves()) frontier.push_back(v);
    std::sort(frontier.begin(), frontier.end());
    int need = g - t.leaf_count();
    while (need > 0) {
        int v = frontier.front();
        frontier.pop_front();
        for (int c = 0; c < 2; ++c) {
            int w = static_cast<int>(t.adj.size());
            t.adj.emplace_back();
            t.adj[v].push_back(w);
            t.adj[w].push_back(v);
            frontier.push_back(w);
        }
        --need;
    }
    t.validate();
    return t;
}

void GluingGraph::validate() const {
    std::set<std::pair<int, int>> used;
    for (const Edge& e : edges) {
        for (auto [p, s] : {std::pair{e.pants_a, e.slot_a}, std::pair{e.pants_b, e.slot_b}}) {
            if (p < 0 || p >= pants_count || s < 1 || s > 3)
                throw GraphError("edge endpoint out of range");
            if (!used.insert({p, s}).second)
                throw GraphError("cuff slot matched twice");
        }
        if (!(e.length > 0)) throw GraphError("cuff length must be positive");
    }
    if (static_cast<int>(used.size()) != 3 * pants_count)
        throw GraphError("unmatched cuff slot");
}

int GluingGraph::leaf_handle_count() const {
    int k = 0;
    for (const Edge& e : edges)
        if (e.self_loop()) ++k;
    return k;
}

int GluingGraph::genus() const {
    return static_cast<int>(edges.size()) - pants_count + 1;
}

nlohmann::json GluingGraph::to_json() const {
    nlohmann::json je = nlohmann::json::array();
    for (const Edge& e : edges)
        je.push_back({{"pants_a", e.pants_a},
                      {"slot_a", e.slot_a},
                      {"pants_b", e.pants_b},
                      {"slot_b", e.slot_b},
                      {"length", e.length},
                      {"twist", e.twist}});
    return {{"pants", pants_count}, {"center", center_pants}, {"edges", je}};
}

GluingGraph GluingGraph::from_json(const nlohmann::json& j) {
    GluingGraph g;
    g.pants_count = j.at("pants").get<int>();
    g.center_pants = j.value("center", 0);
    for (const auto& je : j.at("edges")) {
        Edge e;
        e.pants_a = je.at("pants_a").get<int>();
        e.slot_a = je.at("slot_a").get<int>();
        e.pants_b = je.at("pants_b").get<int>();
        e.slot_b = je.at("slot_b").get<int>();
        e.length = je.at("length").get<double>();
        e.twist = je.at("twist").get<double>();
        g.edges.push_back(e);
    }
    g.validate();
    return g;
}

GluingGraph surface_from_tree(const TrivalentTree& tree) {
    tree.validate();
    const double cuff = 2.0 * std::acosh(2.0);
    GluingGraph g;
    g.pants_count = tree.vertex_count();
    g.center_pants = tree.center;
    // slot 1 faces the parent (or, for the center, the first neighbour)
    std::vector<int> next_slot(tree.vertex_count(), 1);
    auto dist = tree.center_distances();
    std::vector<int> order(tree.vertex_count());
    for (int v = 0; v < tree.vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] < dist[b]; });
    for (int v : order)
        for (int w : tree.adj[v]) {
            if (dist[w] != dist[v] + 1) continue; // child edges only
            GluingGraph::Edge e;
            e.pants_a = v;
            e.slot_a = next_slot[v]++;
            e.pants_b = w;
            e.slot_b = next_slot[w]++;
            e.length = cuff;
            e.twist = 0.0;
            g.edges.push_back(e);
        }
    // leaf pants: glue the two remaining cuffs to each other
    for (int v : tree.leaves()) {
        GluingGraph::Edge e;
        e.pants_a = v;
        e.slot_a = next_slot[v]++;
        e.pants_b = v;
        e.slot_b = next_slot[v]++;
        e.length = cuff;
        e.twist = 0.0;
        g.edges.push_back(e);
    }
    g.validate();
    return g;
}

void CurvePath::validate(const GluingGraph& g) const {
    if (crossings.empty()) throw GraphError("empty path is not a curve");
    for (size_t i = 0; i < crossings.size(); ++i) {
        const auto& c = crossings[i];
        if (c.edge < 0 || c.edge >= static_cast<int>(g.edges.size()))
            throw GraphError("crossing names an unknown edge");
        const auto& e = g.edges[c.edge];
        if (c.entered_pants != e.pants_a && c.entered_pants != e.pants_b)
            throw GraphError("crossing enters a pants not on its edge");
        if (!closed && i + 1 == crossings.size()) break;
        const auto& nxt = crossings[(i + 1) % crossings.size()];
        const auto& en = g.edges[nxt.edge];
        if (c.entered_pants != en.pants_a && c.entered_pants != en.pants_b)
            throw GraphError("consecutive crossings do not share a pants");
    }
}

bool separating_check(const GluingGraph& g, const CurvePath& p) {
    p.validate(g);
    if (!p.closed) throw GraphError("separating_check needs a closed path");
    for (const auto& c : p.crossings)
        if (g.edges[c.edge].self_loop()) return false;
    return true;
}

CoverageResult coverage_check(const GluingGraph& g, const std::vector<CurvePath>& ps) {
    std::vector<char> seen(g.pants_count, 0);
    for (const auto& p : ps) {
        p.validate(g);
        for (const auto& c : p.crossings) {
            seen[g.edges[c.edge].pants_a] = 1;
            seen[g.edges[c.edge].pants_b] = 1;
        }
    }
    CoverageResult r;
    for (int v = 0; v < g.pants_count; ++v)
        if (!seen[v]) r.missed.push_back(v);
    r.covers_all_pants = r.missed.empty();
    return r;
}

double min_length_through_center(const GluingGraph& g) {
    g.validate();
    // BFS over the pants adjacency, self-loops mark the leaf pants
    std::vector<std::vector<int>> adj(g.pants_count);
    std::vector<char> is_leaf(g.pants_count, 0);
    for (const auto& e : g.edges) {
        if (e.self_loop()) {
            is_leaf[e.pants_a] = 1;
        } else {
            adj[e.pants_a].push_back(e.pants_b);
            adj[e.pants_b].push_back(e.pants_a);
        }
    }
    std::vector<int> dist(g.pants_count, -1);
    std::deque<int> q{g.center_pants};
    dist[g.center_pants] = 0;
    int best = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (is_leaf[v]) {
            best = dist[v];
            break;
        }
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    if (best < 0) throw GraphError("no leaf pants reachable from center");
    return best * std::acosh(2.0);
}

} // namespace sysatlas
