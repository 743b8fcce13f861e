#include <parcelforge/graph.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace parcelforge {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

int OrientedGraph::component_count() const {
    if (vertex_count == 0) return 0;
    UnionFind uf(vertex_count);
    int comps = vertex_count;
    for (const auto& [t, h] : edges)
        if (uf.unite(t, h)) --comps;
    return comps;
}

std::vector<std::vector<int>> vertex_edge_matrix(const OrientedGraph& g) {
    std::vector<std::vector<int>> m(g.vertex_count, std::vector<int>(g.edge_count(), 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [t, h] = g.edges[e];
        if (t == h) continue;  // loop column stays zero
        m[h][e] += 1;
        m[t][e] -= 1;
    }
    return m;
}

std::vector<std::vector<int>> fundamental_cycle_matrix(const OrientedGraph& g) {
    const int n = g.vertex_count;
    const int ne = g.edge_count();

    // BFS forest, components rooted at their lowest vertex.
    std::vector<int> parent_edge(n, -1);
    std::vector<int> parent_vertex(n, -1);
    std::vector<bool> visited(n, false);
    std::vector<bool> tree_edge(ne, false);

    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
    for (int e = 0; e < ne; ++e) {
        auto [t, h] = g.edges[e];
        if (t == h) continue;
        adj[t].push_back({h, e});
        adj[h].push_back({t, e});
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end(),
                  [](const auto& x, const auto& y) { return x.second < y.second; });

    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const auto& [w, e] : adj[v]) {
                if (visited[w]) continue;
                visited[w] = true;
                tree_edge[e] = true;
                parent_edge[w] = e;
                parent_vertex[w] = v;
                queue.push_back(w);
            }
        }
    }

    auto path_to_root = [&](int v) {
        std::vector<int> p;  // edge list from v upward
        while (parent_edge[v] != -1) {
            p.push_back(parent_edge[v]);
            v = parent_vertex[v];
        }
        return std::pair<std::vector<int>, int>{p, v};
    };

    std::vector<std::vector<int>> rows;
    for (int e = 0; e < ne; ++e) {
        auto [t, h] = g.edges[e];
        if (t == h) {
            std::vector<int> row(ne, 0);
            row[e] = 1;
            rows.push_back(std::move(row));
            continue;
        }
        if (tree_edge[e]) continue;

        // The fundamental cycle of e: walk h -> root and t -> root, drop the
        // common suffix, then traverse t -> ... -> h -> t.
        std::vector<int> row(ne, 0);
        row[e] = 1;  // e traversed tail -> head
        auto [ph, rh] = path_to_root(h);
        auto [pt, rt] = path_to_root(t);
        if (rh != rt) throw std::logic_error("fundamental cycle spans components");
        while (!ph.empty() && !pt.empty() && ph.back() == pt.back()) {
            ph.pop_back();
            pt.pop_back();
        }
        // Walking from a vertex v across its parent edge goes v -> parent(v).
        // On the h-side we traverse toward the meet (h -> ... -> meet), on the
        // t-side away from it (meet -> ... -> t), which flips the sign.
        int v = h;
        for (int pe : ph) {
            // traversal v -> parent(v): +1 if the edge is oriented v -> parent
            row[pe] = (g.edges[pe].first == v) ? 1 : -1;
            v = (g.edges[pe].first == v) ? g.edges[pe].second : g.edges[pe].first;
        }
        v = t;
        for (int pe : pt) {
            // traversed in the cycle as parent(v) -> v
            row[pe] = (g.edges[pe].second == v) ? 1 : -1;
            v = (g.edges[pe].first == v) ? g.edges[pe].second : g.edges[pe].first;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<int>> all_simple_cycle_rows(const OrientedGraph& g) {
    const int ne = g.edge_count();
    std::vector<std::vector<int>> rows;

    // Loops are one-edge cycles.
    for (int e = 0; e < ne; ++e)
        if (g.is_loop(e)) {
            std::vector<int> row(ne, 0);
            row[e] = 1;
            rows.push_back(std::move(row));
        }

    // Enumerate simple cycles by DFS from each start vertex, only visiting
    // vertices >= start and emitting each cycle once (lowest edge first).
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e = 0; e < ne; ++e) {
        auto [t, h] = g.edges[e];
        if (t == h) continue;
        adj[t].push_back({h, e});
        adj[h].push_back({t, e});
    }

    std::vector<int> stack_vertices, stack_edges;
    std::vector<bool> on_path(g.vertex_count, false);

    auto emit = [&](const std::vector<int>& verts, const std::vector<int>& eds) {
        std::vector<int> row(ne, 0);
        for (std::size_t i = 0; i < eds.size(); ++i) {
            int a = verts[i];
            int e = eds[i];
            row[e] = (g.edges[e].first == a) ? 1 : -1;
        }
        rows.push_back(std::move(row));
    };

    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (const auto& [w, e] : adj[v]) {
            if (!stack_edges.empty() && e == stack_edges.back()) continue;
            if (w == start && stack_edges.size() >= 1) {
                if (e > stack_edges.front() || stack_edges.size() == 1) {
                    auto verts = stack_vertices;
                    auto eds = stack_edges;
                    eds.push_back(e);
                    // two-edge cycles (parallel edges) are valid; dedupe by
                    // requiring first edge minimal
                    if (eds.front() == *std::min_element(eds.begin(), eds.end()))
                        emit(verts, eds);
                }
                continue;
            }
            if (w < start || on_path[w]) continue;
            on_path[w] = true;
            stack_vertices.push_back(w);
            stack_edges.push_back(e);
            dfs(start, w);
            stack_edges.pop_back();
            stack_vertices.pop_back();
            on_path[w] = false;
        }
    };

    for (int start = 0; start < g.vertex_count; ++start) {
        on_path[start] = true;
        stack_vertices = {start};
        stack_edges.clear();
        dfs(start, start);
        on_path[start] = false;
    }

    // Each undirected cycle is found in both traversal directions; keep one
    // of each +/- pair.
    std::vector<std::vector<int>> unique_rows;
    for (auto& row : rows) {
        std::vector<int> negated(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) negated[i] = -row[i];
        bool dup = false;
        for (const auto& kept : unique_rows)
            if (kept == row || kept == negated) { dup = true; break; }
        if (!dup) unique_rows.push_back(row);
    }
    return unique_rows;
}

} // namespace parcelforge
