#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "majicolor/errors.hpp"

namespace majicolor {

// Edges are stored canonically as (min,max); the index of an edge in the
// sorted edge list is its stable id, used by colorings throughout.
struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    friend auto operator<=>(const Edge &, const Edge &) = default;
    bool incident(int x) const { return x == u || x == v; }
    int other(int x) const { return x == u ? v : u; }
};

class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (const Edge &e : edges) {
            if (e.u < 0 || e.v >= n) throw OutOfRangeVertex("edge endpoint outside [0,n)");
            if (e.u == e.v) throw Error("self-loop rejected");
        }
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (int id = 0; id < (int)edges_.size(); ++id) {
            adj_[edges_[id].u].push_back({edges_[id].v, id});
            adj_[edges_[id].v].push_back({edges_[id].u, id});
        }
    }

    static Graph from_pairs(int n, const std::vector<std::pair<int, int>> &pairs) {
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (auto [a, b] : pairs) es.emplace_back(a, b);
        return Graph(n, std::move(es));
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return (int)edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int id) const { return edges_[id]; }

    // (neighbor, edge id) pairs, sorted by neighbor index
    const std::vector<std::pair<int, int>> &neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return (int)adj_[v].size(); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    int min_degree() const {
        if (n_ == 0) return 0;
        int d = degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool has_edge(int a, int b) const { return edge_id(a, b).has_value(); }
    std::optional<int> edge_id(int a, int b) const {
        Edge e(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e) return (int)(it - edges_.begin());
        return std::nullopt;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

class Digraph {
  public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        for (auto [u, v] : arcs) {
            if (u < 0 || u >= n || v < 0 || v >= n) throw OutOfRangeVertex("arc endpoint outside [0,n)");
            if (u == v) throw Error("self-loop rejected");
        }
        arcs_ = std::move(arcs);
        out_.assign(n_, {});
        in_.assign(n_, {});
        for (int id = 0; id < (int)arcs_.size(); ++id) {
            out_[arcs_[id].first].push_back({arcs_[id].second, id});
            in_[arcs_[id].second].push_back({arcs_[id].first, id});
        }
    }

    int num_vertices() const { return n_; }
    int num_arcs() const { return (int)arcs_.size(); }
    const std::vector<std::pair<int, int>> &arcs() const { return arcs_; }
    const std::pair<int, int> &arc(int id) const { return arcs_[id]; }

    const std::vector<std::pair<int, int>> &out_neighbors(int v) const { return out_[v]; }
    const std::vector<std::pair<int, int>> &in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return (int)out_[v].size(); }
    int in_degree(int v) const { return (int)in_[v].size(); }

    std::optional<int> arc_id(int u, int v) const {
        auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair<int, int>{u, v});
        if (it != arcs_.end() && *it == std::pair<int, int>{u, v}) return (int)(it - arcs_.begin());
        return std::nullopt;
    }

    bool is_symmetric() const {
        for (auto [u, v] : arcs_)
            if (!arc_id(v, u)) return false;
        return true;
    }

    // Underlying simple graph of a symmetric digraph.
    Graph underlying() const {
        std::vector<Edge> es;
        for (auto [u, v] : arcs_)
            if (u < v) es.emplace_back(u, v);
        return Graph(n_, std::move(es));
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<std::pair<int, int>>> out_, in_;
};

inline Digraph symmetric_closure(const Graph &g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * g.num_edges());
    for (const Edge &e : g.edges()) {
        arcs.push_back({e.u, e.v});
        arcs.push_back({e.v, e.u});
    }
    return Digraph(g.num_vertices(), std::move(arcs));
}

// BFS distances from a; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph &g, int a) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<int> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, id] : g.neighbors(v)) {
            (void)id;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

struct SphereDecomposition {
    int root = 0;
    std::vector<std::vector<int>> layers; // layers[r] = S_r(root)
    std::vector<int> distances;           // -1 for vertices outside root's component

    int dist(int v) const { return distances[v]; }
    int radius() const { return (int)layers.size() - 1; }
};

inline SphereDecomposition spheres(const Graph &g, int a) {
    SphereDecomposition sd;
    sd.root = a;
    sd.distances = bfs_distances(g, a);
    int maxd = 0;
    for (int d : sd.distances) maxd = std::max(maxd, d);
    sd.layers.assign(maxd + 1, {});
    for (int v = 0; v < g.num_vertices(); ++v)
        if (sd.distances[v] >= 0) sd.layers[sd.distances[v]].push_back(v);
    return sd;
}

// True iff every vertex lies distance-wise on a shortest a-b path.
inline bool geodesic_cover_check(const Graph &g, int a, int b) {
    auto da = bfs_distances(g, a);
    auto db = bfs_distances(g, b);
    if (da[b] < 0) return false;
    int d = da[b];
    for (int v = 0; v < g.num_vertices(); ++v)
        if (da[v] < 0 || da[v] + db[v] != d) return false;
    return true;
}

inline bool is_connected(const Graph &g) {
    if (g.num_vertices() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

// Two-coloring of the vertex set if g is bipartite.
inline std::optional<std::vector<int>> bipartition(const Graph &g) {
    std::vector<int> side(g.num_vertices(), -1);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, id] : g.neighbors(v)) {
                (void)id;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

struct BlockTree {
    std::vector<std::vector<int>> blocks; // edge ids per block; every edge in exactly one block
    std::vector<int> cut_vertices;
    std::vector<int> block_of_edge;            // edge id -> block index
    std::vector<std::vector<int>> blocks_at;   // vertex -> indices of blocks containing it

    bool is_cut_vertex(int v) const {
        return std::find(cut_vertices.begin(), cut_vertices.end(), v) != cut_vertices.end();
    }
    std::vector<int> block_vertices(int b, const Graph &g) const {
        std::set<int> vs;
        for (int id : blocks[b]) {
            vs.insert(g.edge(id).u);
            vs.insert(g.edge(id).v);
        }
        return std::vector<int>(vs.begin(), vs.end());
    }
};

// Hopcroft-Tarjan biconnected components (iterative).
inline BlockTree block_decomposition(const Graph &g) {
    int n = g.num_vertices();
    BlockTree bt;
    bt.block_of_edge.assign(g.num_edges(), -1);
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<bool> is_cut(n, false);
    std::vector<int> edge_stack;
    int counter = 0;

    struct Frame {
        int v;
        size_t next_nbr;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        int root_children = 0;
        std::vector<Frame> stack;
        num[root] = low[root] = counter++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto &[v, idx] = stack.back();
            if (idx < g.neighbors(v).size()) {
                auto [w, eid] = g.neighbors(v)[idx];
                ++idx;
                if (num[w] < 0) {
                    edge_stack.push_back(eid);
                    parent[w] = v;
                    num[w] = low[w] = counter++;
                    if (v == root) ++root_children;
                    stack.push_back({w, 0});
                } else if (num[w] < num[v] && w != parent[v]) {
                    edge_stack.push_back(eid);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= num[u]) {
                        if (u != root || root_children > 1) is_cut[u] = true;
                        // pop the block rooted at edge (u,v)
                        std::vector<int> block;
                        while (!edge_stack.empty()) {
                            int eid = edge_stack.back();
                            const Edge &e = g.edge(eid);
                            if (std::max(num[e.u], num[e.v]) < num[v]) break;
                            edge_stack.pop_back();
                            block.push_back(eid);
                        }
                        std::sort(block.begin(), block.end());
                        for (int eid : block) bt.block_of_edge[eid] = (int)bt.blocks.size();
                        bt.blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) bt.cut_vertices.push_back(v);
    bt.blocks_at.assign(n, {});
    for (int b = 0; b < (int)bt.blocks.size(); ++b) {
        std::set<int> vs;
        for (int eid : bt.blocks[b]) {
            vs.insert(g.edge(eid).u);
            vs.insert(g.edge(eid).v);
        }
        for (int v : vs) bt.blocks_at[v].push_back(b);
    }
    return bt;
}

inline bool is_two_connected(const Graph &g) {
    if (g.num_vertices() < 3) return false;
    if (!is_connected(g)) return false;
    return block_decomposition(g).blocks.size() == 1;
}

inline bool has_pendant_edge(const Graph &g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 1) return true;
    return false;
}

// Same vertex set, edge set E(g) \ E(h); h must be a spanning subgraph of g.
inline Graph graph_minus(const Graph &g, const Graph &h) {
    if (h.num_vertices() != g.num_vertices()) throw NotASubgraph("vertex sets differ");
    std::vector<Edge> rest;
    for (const Edge &e : h.edges())
        if (!g.has_edge(e.u, e.v)) throw NotASubgraph("edge not present in supergraph");
    for (const Edge &e : g.edges())
        if (!h.has_edge(e.u, e.v)) rest.push_back(e);
    return Graph(g.num_vertices(), std::move(rest));
}

// Subgraph induced by keeping the listed edge ids (same vertex set).
inline Graph edge_subgraph(const Graph &g, const std::vector<int> &edge_ids) {
    std::vector<Edge> es;
    es.reserve(edge_ids.size());
    for (int id : edge_ids) es.push_back(g.edge(id));
    return Graph(g.num_vertices(), std::move(es));
}

} // namespace majicolor
