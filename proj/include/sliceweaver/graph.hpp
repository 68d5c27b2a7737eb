#pragma once

#include <cstdint>
#include <vector>

namespace sliceweaver {

/// Undirected service-dependency graph. Adjacency is symmetric and
/// self-loop free by construction.
class DependencyGraph {
public:
    DependencyGraph() = default;
    explicit DependencyGraph(int vertex_count);

    int vertex_count() const { return vertex_count_; }
    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int v) const;
    std::int64_t edge_count() const;

private:
    void check_vertex(int v) const;

    int vertex_count_ = 0;
    std::vector<bool> adj_;  // row-major vertex_count_ x vertex_count_
};

/// Proper vertex coloring; color indices are contiguous from 0.
struct Coloring {
    std::vector<int> assignment;
    int colors_used = 0;
};

/// Independent layers joined completely between consecutive layers only.
struct LayeredPartite {
    std::vector<int> layer_sizes;

    int layer_count() const { return static_cast<int>(layer_sizes.size()); }
    DependencyGraph to_graph() const;
};

/// Complete graph on u vertices: every service depends on all previously
/// admitted ones.
DependencyGraph build_dependency_graph(int u);

/// True iff the set is pairwise adjacent and no outside vertex is adjacent
/// to every member.
bool is_maximal_clique(const DependencyGraph& g, const std::vector<int>& vertices);

/// Exact clique number by subset enumeration. Capped at 16 vertices.
int max_clique_size_brute(const DependencyGraph& g);

/// Vertices sorted by non-increasing degree, ties by ascending index.
std::vector<int> degree_ordering(const DependencyGraph& g);

/// Greedy coloring along the degree ordering: each vertex takes the
/// smallest color absent among its already-colored neighbors.
Coloring greedy_color(const DependencyGraph& g);

/// Neighbors of ordering[position] occurring earlier in the ordering.
int earlier_neighbors(const DependencyGraph& g, const std::vector<int>& ordering,
                      int position);

/// Exact chromatic number by exhaustive search. Capped at 10 vertices.
int chromatic_number_brute(const DependencyGraph& g);

/// True iff every induced subgraph has chromatic number equal to clique
/// number. Capped at 8 vertices.
bool is_perfect_brute(const DependencyGraph& g);

/// Proper k-colorings of the complete graph on u vertices, the falling
/// factorial k(k-1)...(k-u+1); zero as soon as a factor is non-positive.
std::int64_t chromatic_poly_complete(int u, int k);

/// Layer-uniform colorings of an n-layer partite chain where consecutive
/// layers differ: k(k-1)^(n-1).
std::int64_t chromatic_poly_layered_partite(int n, int k);

}  // namespace sliceweaver
