#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "kvisi/graph.hpp"

// Combinatorial planarity test via iterative face embedding (the classical
// Demoucron-Malgrange-Pertuiset scheme), run per biconnected component.
// Quadratic-ish and meant for the small graphs this project produces; it is
// the abstract counterpart to the geometric crossing certificates.

namespace kvisi {

namespace detail {

struct BicompSplitter {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> components;
    int timer = 0;

    explicit BicompSplitter(const std::vector<std::vector<int>>& a)
        : adj(a), disc(a.size(), -1), low(a.size(), 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int parent_edges = 0;
        for (int v : adj[u]) {
            if (v == parent && parent_edges == 0) { ++parent_edges; continue; }
            if (disc[v] == -1) {
                stack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    components.emplace_back();
                    for (;;) {
                        auto e = stack.back();
                        stack.pop_back();
                        components.back().push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                }
            } else if (disc[v] < disc[u]) {
                stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

// Planarity of one biconnected component given as an edge list.
inline bool bicomp_planar(const std::vector<std::pair<int, int>>& comp_edges) {
    // Relabel vertices.
    std::vector<int> verts;
    for (auto [u, v] : comp_edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    int n = int(verts.size());
    long long m = (long long)comp_edges.size();
    if (n <= 4) return true;
    if (m > 3LL * n - 6) return false;

    auto id = [&](int v) {
        return int(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : comp_edges) {
        adj[id(u)].insert(id(v));
        adj[id(v)].insert(id(u));
    }

    std::vector<std::vector<bool>> embedded(n, std::vector<bool>(n, false));
    std::vector<bool> in_h(n, false);

    // Seed with any cycle (exists: biconnected with >= 5 vertices). A
    // recursive DFS finds a back edge to an ancestor on the current path.
    std::vector<int> cycle;
    {
        std::vector<int> color(n, 0), parent(n, -1);
        int cu = -1, cv = -1;
        auto dfs = [&](auto&& self, int u, int par) -> void {
            color[u] = 1;
            for (int v : adj[u]) {
                if (cu != -1) return;
                if (v == par) continue;
                if (color[v] == 1) { cu = u; cv = v; return; }
                if (color[v] == 0) {
                    parent[v] = u;
                    self(self, v, u);
                }
            }
            color[u] = 2;
        };
        dfs(dfs, 0, -1);
        if (cu == -1) return true;  // forest: no cycle at all
        for (int x = cu; x != cv; x = parent[x]) cycle.push_back(x);
        cycle.push_back(cv);
    }
    if (cycle.size() < 3) return false;  // should not happen in a bicomp

    std::vector<std::vector<int>> faces;
    faces.push_back(cycle);
    faces.push_back(std::vector<int>(cycle.rbegin(), cycle.rend()));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        embedded[u][v] = embedded[v][u] = true;
        in_h[u] = in_h[v] = true;
    }

    auto remaining_edges = [&]() {
        long long r = 0;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v && !embedded[u][v]) ++r;
        return r;
    };

    while (remaining_edges() > 0) {
        // Fragments: chords between embedded vertices, and connected
        // components of G - H with their attachment vertices.
        struct Fragment {
            std::vector<int> attachments;       // vertices on H
            std::vector<int> inner;             // vertices off H (may be empty)
            std::pair<int, int> chord{-1, -1};  // set when the fragment is a chord
        };
        std::vector<Fragment> fragments;

        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v && in_h[u] && in_h[v] && !embedded[u][v]) {
                    Fragment f;
                    f.attachments = {u, v};
                    f.chord = {u, v};
                    fragments.push_back(f);
                }

        std::vector<int> comp_of(n, -1);
        for (int s = 0; s < n; ++s) {
            if (in_h[s] || comp_of[s] != -1) continue;
            Fragment f;
            std::vector<int> stack = {s};
            comp_of[s] = int(fragments.size());
            std::set<int> att;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                f.inner.push_back(u);
                for (int v : adj[u]) {
                    if (in_h[v]) att.insert(v);
                    else if (comp_of[v] == -1) {
                        comp_of[v] = int(fragments.size());
                        stack.push_back(v);
                    }
                }
            }
            f.attachments.assign(att.begin(), att.end());
            fragments.push_back(f);
        }

        // Admissible faces per fragment.
        int pick = -1;
        std::vector<int> pick_faces;
        for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
            std::vector<int> admissible;
            for (std::size_t i = 0; i < faces.size(); ++i) {
                std::set<int> fv(faces[i].begin(), faces[i].end());
                bool ok = true;
                for (int a : fragments[fi].attachments)
                    if (!fv.count(a)) { ok = false; break; }
                if (ok) admissible.push_back(int(i));
            }
            if (admissible.empty()) return false;
            if (admissible.size() == 1) {
                pick = int(fi);
                pick_faces = admissible;
                break;
            }
            if (pick == -1) {
                pick = int(fi);
                pick_faces = admissible;
            }
        }

        // Path through the picked fragment between two attachments.
        const Fragment& fr = fragments[pick];
        std::vector<int> path;
        if (fr.chord.first != -1) {
            path = {fr.chord.first, fr.chord.second};
        } else {
            // BFS inside the fragment from one attachment to another.
            int src = fr.attachments[0];
            std::set<int> inner(fr.inner.begin(), fr.inner.end());
            std::vector<int> parent(n, -2);
            std::vector<int> queue = {src};
            parent[src] = -1;
            int dst = -1;
            for (std::size_t qi = 0; qi < queue.size() && dst == -1; ++qi) {
                int u = queue[qi];
                for (int v : adj[u]) {
                    if (parent[v] != -2) continue;
                    bool v_inner = inner.count(v) > 0;
                    // The path must pass through the fragment interior, so
                    // from the source only fragment vertices are eligible.
                    if (u == src && !v_inner) continue;
                    bool v_att = std::find(fr.attachments.begin(), fr.attachments.end(), v) !=
                                 fr.attachments.end();
                    if (!v_inner && !v_att) continue;
                    parent[v] = u;
                    if (v_att && v != src) { dst = v; break; }
                    if (v_inner) queue.push_back(v);
                }
            }
            if (dst == -1) return false;  // disconnected fragment; defensive
            for (int x = dst; x != -1; x = parent[x]) path.push_back(x);
            std::reverse(path.begin(), path.end());
        }

        // Embed the path into one admissible face, splitting it in two.
        int face_idx = pick_faces[0];
        std::vector<int> face = faces[face_idx];
        int a = path.front(), b = path.back();
        int ia = -1, ib = -1;
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (face[i] == a && ia == -1) ia = int(i);
            if (face[i] == b && ib == -1) ib = int(i);
        }
        std::vector<int> side1, side2;
        for (int i = ia;; i = (i + 1) % int(face.size())) {
            side1.push_back(face[i]);
            if (i == ib) break;
        }
        for (int i = ib;; i = (i + 1) % int(face.size())) {
            side2.push_back(face[i]);
            if (i == ia) break;
        }
        // New faces: side1 + reversed path interior, side2 + path interior.
        std::vector<int> nf1 = side1, nf2 = side2;
        for (int i = int(path.size()) - 2; i >= 1; --i) nf1.push_back(path[i]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) nf2.push_back(path[i]);
        faces[face_idx] = nf1;
        faces.push_back(nf2);

        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            embedded[path[i]][path[i + 1]] = embedded[path[i + 1]][path[i]] = true;
            in_h[path[i]] = in_h[path[i + 1]] = true;
        }
    }
    return true;
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
    if (g.n <= 4) return true;
    if ((long long)g.edge_count() > 3LL * g.n - 6) return false;
    auto adj = g.adjacency();
    detail::BicompSplitter splitter(adj);
    for (int v = 0; v < g.n; ++v)
        if (splitter.disc[v] == -1) splitter.dfs(v, -1);
    for (const auto& comp : splitter.components)
        if (!detail::bicomp_planar(comp)) return false;
    return true;
}

}  // namespace kvisi
