#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

/// Finite undirected simple graph. Vertices are 0..n-1, edges kept with
/// u < v, sorted lexicographically. Instances are immutable after
/// construction; deletions return new graphs.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
};

Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

Graph remove_vertex(const Graph& g, int v);
Graph remove_vertices(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);

/// Disjoint union (vertex labels of b shifted by a.n).
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<std::vector<int>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

/// Box in Z^d with given side lengths, open or periodic boundary.
/// Periodic sides must be >= 3 (otherwise parallel edges would arise).
Graph build_box(int d, const std::vector<int>& sides, bool periodic);

/// Patch of rows x cols hexagon cells in the brick-wall embedding of the
/// honeycomb lattice, open or torus-quotient boundary. Periodic needs
/// rows even and cols >= 2 so the 2-coloring stays consistent.
Graph build_honeycomb_patch(int rows, int cols, bool periodic);

/// Cycle C_n and path P_n helpers.
Graph build_cycle(int n);
Graph build_path(int n);

/// Product graph C_m x P_n (m >= 3, n >= 1).
Graph build_cycle_path(int m, int n);
/// Product graph C_m x C_n (both >= 3).
Graph build_cycle_cycle(int m, int n);

/// Circulant graph on n vertices with connection set of offsets.
Graph build_circulant(int n, const std::vector<int>& offsets);

/// Isomorphism-invariant key from iterative color refinement. Not a
/// complete invariant: equal keys require an isomorphic() confirmation.
std::string refinement_key(const Graph& g);

/// Exact isomorphism test by individualization-refinement backtracking.
/// Intended for the small graphs that arise in memoized recursions.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace mdim
