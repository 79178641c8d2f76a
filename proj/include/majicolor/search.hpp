#pragma once

#include <optional>

#include "majicolor/automorphism.hpp"
#include "majicolor/graph.hpp"
#include "majicolor/rng.hpp"

namespace majicolor {

enum class SearchStatus {
    found,
    budget_exhausted, // inconclusive
    proven_absent,    // only after exhaustive search
};

template <typename T> struct SearchResult {
    SearchStatus status;
    std::optional<T> value;

    static SearchResult hit(T v) { return {SearchStatus::found, std::move(v)}; }
    static SearchResult exhausted() { return {SearchStatus::budget_exhausted, std::nullopt}; }
    static SearchResult absent() { return {SearchStatus::proven_absent, std::nullopt}; }
};

namespace detail {

struct LongestCycleSearch {
    const Graph &g;
    uint64_t budget;
    bool exhausted = false;
    std::vector<int> best;
    std::vector<char> on_path;
    std::vector<int> path;
    int start = 0;

    LongestCycleSearch(const Graph &g_, uint64_t b) : g(g_), budget(b), on_path(g_.num_vertices(), 0) {}

    // upper bound: vertices >= start reachable from v through unused vertices
    int reach_bound(int v) {
        std::vector<int> stack{v};
        std::vector<char> seen(g.num_vertices(), 0);
        seen[v] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++cnt;
            for (auto [w, id] : g.neighbors(x)) {
                (void)id;
                if (w >= start && !seen[w] && (!on_path[w] || w == start)) {
                    if (w == start) continue;
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return cnt;
    }

    void dfs(int v) {
        if (exhausted) return;
        if (budget == 0) {
            exhausted = true;
            return;
        }
        --budget;
        if ((int)path.size() + reach_bound(v) - 1 <= (int)best.size()) return;
        for (auto [w, id] : g.neighbors(v)) {
            (void)id;
            if (w == start && path.size() >= 3 && path.size() > best.size()) best = path;
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            on_path[w] = 0;
            if (exhausted) return;
        }
    }

    void run() {
        for (start = 0; start < g.num_vertices() && !exhausted; ++start) {
            path = {start};
            on_path.assign(g.num_vertices(), 0);
            on_path[start] = 1;
            dfs(start);
        }
    }
};

// Randomized DFS; any back edge spanning >= min_len closes a cycle.
inline std::optional<std::vector<int>> random_cycle_at_least(const Graph &g, int min_len,
                                                             uint64_t &budget, Rng &rng) {
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (int s : order) {
        std::vector<int> depth(n, -1), parent(n, -1);
        std::vector<std::pair<int, int>> stack{{s, -1}};
        while (!stack.empty()) {
            if (budget == 0) return std::nullopt;
            --budget;
            auto [v, p] = stack.back();
            stack.pop_back();
            if (depth[v] >= 0) continue;
            parent[v] = p;
            depth[v] = p < 0 ? 0 : depth[p] + 1;
            std::vector<int> nbrs;
            for (auto [w, id] : g.neighbors(v)) {
                (void)id;
                nbrs.push_back(w);
            }
            rng.shuffle(nbrs);
            for (int w : nbrs) {
                if (depth[w] < 0) {
                    stack.push_back({w, v});
                } else if (w != p && depth[v] - depth[w] + 1 >= min_len) {
                    std::vector<int> cyc;
                    for (int x = v; x != w; x = parent[x]) cyc.push_back(x);
                    cyc.push_back(w);
                    // ancestor chains only; reject if w was not an ancestor of v
                    bool ok = true;
                    for (size_t i = 0; i + 1 < cyc.size() && ok; ++i)
                        ok = g.has_edge(cyc[i], cyc[i + 1]);
                    if (ok && (int)cyc.size() >= min_len) return cyc;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

// Cycle of length >= min_len as a vertex sequence. For graphs up to the
// exhaustive threshold the search finds the longest cycle and absence is
// proven; beyond it a randomized search reports budget exhaustion instead.
inline SearchResult<std::vector<int>> find_cycle(const Graph &g, int min_len,
                                                 uint64_t budget = 20'000'000, uint64_t seed = 1,
                                                 int exhaustive_threshold = 20) {
    if (min_len < 3) min_len = 3;
    if (g.num_vertices() <= exhaustive_threshold) {
        detail::LongestCycleSearch s(g, budget);
        s.run();
        if (!s.exhausted) {
            if ((int)s.best.size() >= min_len) return SearchResult<std::vector<int>>::hit(s.best);
            return SearchResult<std::vector<int>>::absent();
        }
        if ((int)s.best.size() >= min_len) return SearchResult<std::vector<int>>::hit(s.best);
        return SearchResult<std::vector<int>>::exhausted();
    }
    Rng rng(seed);
    for (int round = 0; round < 50 && budget > 0; ++round) {
        if (auto c = detail::random_cycle_at_least(g, min_len, budget, rng))
            return SearchResult<std::vector<int>>::hit(*c);
    }
    return SearchResult<std::vector<int>>::exhausted();
}

namespace detail {

struct HamPathSearch {
    const Graph &g;
    uint64_t budget;
    bool exhausted = false;
    std::vector<int> path;
    std::vector<char> used;
    bool done = false;

    HamPathSearch(const Graph &g_, uint64_t b) : g(g_), budget(b), used(g_.num_vertices(), 0) {}

    bool feasible(int head) {
        // every unused vertex must keep an unused neighbor or be adjacent to head
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (used[v]) continue;
            bool ok = false;
            for (auto [w, id] : g.neighbors(v)) {
                (void)id;
                if (!used[w] || w == head) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    void dfs(int v) {
        if (done || exhausted) return;
        if (budget == 0) {
            exhausted = true;
            return;
        }
        --budget;
        if ((int)path.size() == g.num_vertices()) {
            done = true;
            return;
        }
        if (!feasible(v)) return;
        std::vector<std::pair<int, int>> cands;
        for (auto [w, id] : g.neighbors(v)) {
            (void)id;
            if (used[w]) continue;
            int free_deg = 0;
            for (auto [x, id2] : g.neighbors(w)) {
                (void)id2;
                if (!used[x]) ++free_deg;
            }
            cands.push_back({free_deg, w});
        }
        std::sort(cands.begin(), cands.end());
        for (auto [fd, w] : cands) {
            (void)fd;
            used[w] = 1;
            path.push_back(w);
            dfs(w);
            if (done || exhausted) return;
            path.pop_back();
            used[w] = 0;
        }
    }
};

// Posa-rotation heuristic for larger graphs.
inline std::optional<std::vector<int>> posa_path(const Graph &g, uint64_t &budget, Rng &rng) {
    int n = g.num_vertices();
    std::vector<int> path{rng.below(n)};
    std::vector<int> pos(n, -1);
    pos[path[0]] = 0;
    while ((int)path.size() < n) {
        if (budget == 0) return std::nullopt;
        --budget;
        int head = path.back();
        std::vector<int> outside, inside;
        for (auto [w, id] : g.neighbors(head)) {
            (void)id;
            if (pos[w] < 0) outside.push_back(w);
            else if (pos[w] + 1 < (int)path.size()) inside.push_back(w);
        }
        if (!outside.empty()) {
            int w = outside[rng.below((int)outside.size())];
            pos[w] = (int)path.size();
            path.push_back(w);
        } else if (!inside.empty()) {
            int w = inside[rng.below((int)inside.size())];
            int i = pos[w];
            std::reverse(path.begin() + i + 1, path.end());
            for (int j = i + 1; j < (int)path.size(); ++j) pos[path[j]] = j;
        } else {
            return std::nullopt;
        }
    }
    return path;
}

} // namespace detail

inline SearchResult<std::vector<int>> find_hamiltonian_path(const Graph &g,
                                                            uint64_t budget = 20'000'000,
                                                            uint64_t seed = 1,
                                                            int exhaustive_threshold = 18) {
    int n = g.num_vertices();
    if (n == 0) return SearchResult<std::vector<int>>::absent();
    if (n == 1) return SearchResult<std::vector<int>>::hit({0});
    if (!is_connected(g)) return SearchResult<std::vector<int>>::absent();
    if (n <= exhaustive_threshold) {
        detail::HamPathSearch s(g, budget);
        for (int start = 0; start < n; ++start) {
            s.path = {start};
            s.used.assign(n, 0);
            s.used[start] = 1;
            s.dfs(start);
            if (s.done) return SearchResult<std::vector<int>>::hit(s.path);
            if (s.exhausted) return SearchResult<std::vector<int>>::exhausted();
        }
        return SearchResult<std::vector<int>>::absent();
    }
    Rng rng(seed);
    while (budget > 0) {
        if (auto p = detail::posa_path(g, budget, rng)) return SearchResult<std::vector<int>>::hit(*p);
    }
    return SearchResult<std::vector<int>>::exhausted();
}

namespace detail {

inline Graph random_spanning_tree(const Graph &g, Rng &rng) {
    int n = g.num_vertices();
    std::vector<Edge> tree;
    std::vector<char> seen(n, 0);
    std::vector<int> frontier{rng.below(n)};
    seen[frontier[0]] = 1;
    // randomized DFS tree
    while (!frontier.empty()) {
        int v = frontier.back();
        std::vector<int> nbrs;
        for (auto [w, id] : g.neighbors(v)) {
            (void)id;
            if (!seen[w]) nbrs.push_back(w);
        }
        if (nbrs.empty()) {
            frontier.pop_back();
            continue;
        }
        int w = nbrs[rng.below((int)nbrs.size())];
        seen[w] = 1;
        tree.emplace_back(v, w);
        frontier.push_back(w);
    }
    return Graph(n, std::move(tree));
}

} // namespace detail

// Connected spanning subgraph with trivial automorphism group. Candidates are
// random DFS trees, optionally with a few extra edges; each one is certified,
// never assumed. Exhaustive (hence able to prove absence) for tiny graphs.
inline SearchResult<Graph> find_asymmetric_spanning_subgraph(const Graph &g, int attempts = 200,
                                                             uint64_t seed = 1) {
    if (!is_connected(g)) return SearchResult<Graph>::absent();
    int n = g.num_vertices(), m = g.num_edges();
    if (m <= 14) {
        for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
            if (__builtin_popcountll(mask) < n - 1) continue;
            std::vector<Edge> es;
            for (int i = 0; i < m; ++i)
                if (mask & (1ull << i)) es.push_back(g.edge(i));
            Graph h(n, std::move(es));
            if (!is_connected(h)) continue;
            if (is_asymmetric(h)) return SearchResult<Graph>::hit(std::move(h));
        }
        return SearchResult<Graph>::absent();
    }
    Rng rng(seed);
    for (int a = 0; a < attempts; ++a) {
        Graph t = detail::random_spanning_tree(g, rng);
        if (is_asymmetric(t)) return SearchResult<Graph>::hit(std::move(t));
        // local edge additions: trees with symmetry often lose it with a chord
        std::vector<Edge> es = t.edges();
        int extra = 1 + a % 3;
        for (int e = 0; e < extra; ++e) es.push_back(g.edge(rng.below(m)));
        Graph h(n, std::move(es));
        if (h.num_edges() > t.num_edges() && is_asymmetric(h)) return SearchResult<Graph>::hit(std::move(h));
    }
    return SearchResult<Graph>::exhausted();
}

} // namespace majicolor
