#ifndef PARCELFORGE_GRAPH_HPP
#define PARCELFORGE_GRAPH_HPP

#include <utility>
#include <vector>

namespace parcelforge {

// An oriented multigraph.  Edge order is the ground-set order; loops are
// allowed (tail == head) and produce all-zero incidence columns.
struct OrientedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // (tail, head)

    int edge_count() const { return static_cast<int>(edges.size()); }
    int component_count() const;
    bool is_loop(int e) const { return edges[e].first == edges[e].second; }
};

// |V| x |E| matrix with the ve-entry +1 if e enters v, -1 if e leaves v.
std::vector<std::vector<int>> vertex_edge_matrix(const OrientedGraph& g);

/*
 * Fundamental-cycle matrix of a deterministic spanning forest (BFS from the
 * lowest vertex of each component, edges scanned in ground-set order).  One
 * row per non-tree edge; entries are +1 for edges traversed tail-to-head
 * along the cycle and -1 otherwise, so every row is orthogonal to every row
 * of the vertex-edge matrix.  A loop yields the unit row on itself.
 */
std::vector<std::vector<int>> fundamental_cycle_matrix(const OrientedGraph& g);

// All simple cycles of g as signed rows (same convention); used as the
// exhaustive oracle for the fundamental-cycle construction.
std::vector<std::vector<int>> all_simple_cycle_rows(const OrientedGraph& g);

} // namespace parcelforge

#endif
