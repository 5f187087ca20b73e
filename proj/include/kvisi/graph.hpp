#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kvisi {

// Simple undirected graph on vertices 0..n-1. Edges are kept normalized
// (u < v), deduplicated, and sorted lexicographically so serialization is
// canonical.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    explicit Graph(int n_) : n(n_) {}

    static Graph from_edges(int n, std::vector<std::pair<int, int>> raw) {
        Graph g(n);
        std::set<std::pair<int, int>> uniq;
        for (auto [u, v] : raw) {
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            uniq.insert({u, v});
        }
        g.edges.assign(uniq.begin(), uniq.end());
        return g;
    }

    void add_edge(int u, int v) {
        if (u == v) return;
        if (u > v) std::swap(u, v);
        auto e = std::make_pair(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) edges.insert(it, e);
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    std::size_t edge_count() const { return edges.size(); }

    bool is_complete() const {
        return (long long)edges.size() * 2 == (long long)n * (n - 1);
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n, 0);
        for (auto [u, v] : edges) {
            ++d[u];
            ++d[v];
        }
        return d;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n == b.n && a.edges == b.edges;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

    // True when every edge of *this appears in g.
    bool subgraph_of(const Graph& g) const {
        for (auto [u, v] : edges)
            if (!g.has_edge(u, v)) return false;
        return true;
    }
};

inline std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    std::vector<bool> touched(g.n, false);
    for (auto [u, v] : g.edges) touched[u] = touched[v] = true;
    for (int v = 0; v < g.n; ++v)
        if (!touched[v]) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges)
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace kvisi
