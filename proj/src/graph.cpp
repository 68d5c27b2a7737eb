#include "sliceweaver/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sliceweaver/errors.hpp"

namespace sliceweaver {

namespace {

constexpr int kCliqueBudget = 16;
constexpr int kChromaticBudget = 10;
constexpr int kPerfectBudget = 8;

std::vector<std::uint32_t> neighbor_masks(const DependencyGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> masks(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (g.adjacent(u, v)) masks[u] |= 1u << v;
        }
    }
    return masks;
}

DependencyGraph induced_subgraph(const DependencyGraph& g, std::uint32_t mask) {
    std::vector<int> picked;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (mask & (1u << v)) picked.push_back(v);
    }
    DependencyGraph sub(static_cast<int>(picked.size()));
    for (std::size_t i = 0; i < picked.size(); ++i) {
        for (std::size_t j = i + 1; j < picked.size(); ++j) {
            if (g.adjacent(picked[i], picked[j])) {
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return sub;
}

// Backtracking search for a proper coloring with at most k colors. A vertex
// may open at most one new color beyond those already in use; permuting
// color names never changes feasibility.
bool extend_coloring(const DependencyGraph& g, std::vector<int>& colors, int vertex,
                     int k, int used) {
    if (vertex == g.vertex_count()) return true;
    const int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
        bool clash = false;
        for (int w = 0; w < vertex; ++w) {
            if (colors[w] == c && g.adjacent(vertex, w)) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        colors[vertex] = c;
        if (extend_coloring(g, colors, vertex + 1, k, std::max(used, c + 1))) return true;
        colors[vertex] = -1;
    }
    return false;
}

bool colorable_with(const DependencyGraph& g, int k) {
    std::vector<int> colors(g.vertex_count(), -1);
    return extend_coloring(g, colors, 0, k, 0);
}

}  // namespace

DependencyGraph::DependencyGraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw InputError("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(vertex_count) * vertex_count, false);
}

void DependencyGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count_) {
        throw InputError("vertex index " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count_) + ")");
    }
}

bool DependencyGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * vertex_count_ + v];
}

void DependencyGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self loops are not allowed");
    adj_[static_cast<std::size_t>(u) * vertex_count_ + v] = true;
    adj_[static_cast<std::size_t>(v) * vertex_count_ + u] = true;
}

int DependencyGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < vertex_count_; ++w) {
        if (adj_[static_cast<std::size_t>(v) * vertex_count_ + w]) ++d;
    }
    return d;
}

std::int64_t DependencyGraph::edge_count() const {
    std::int64_t twice = 0;
    for (int v = 0; v < vertex_count_; ++v) twice += degree(v);
    return twice / 2;
}

DependencyGraph LayeredPartite::to_graph() const {
    if (layer_sizes.empty()) throw InputError("layer count must be positive");
    int total = 0;
    for (int s : layer_sizes) {
        if (s <= 0) throw InputError("layer sizes must be positive");
        total += s;
    }
    DependencyGraph g(total);
    int offset = 0;
    for (std::size_t layer = 0; layer + 1 < layer_sizes.size(); ++layer) {
        const int a = layer_sizes[layer];
        const int b = layer_sizes[layer + 1];
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                g.add_edge(offset + i, offset + a + j);
            }
        }
        offset += a;
    }
    return g;
}

DependencyGraph build_dependency_graph(int u) {
    DependencyGraph g(u);
    for (int v = 1; v < u; ++v) {
        for (int w = 0; w < v; ++w) g.add_edge(v, w);
    }
    return g;
}

bool is_maximal_clique(const DependencyGraph& g, const std::vector<int>& vertices) {
    std::vector<int> members(vertices);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<bool> in_set(g.vertex_count(), false);
    for (int v : members) {
        if (v < 0 || v >= g.vertex_count()) {
            throw InputError("clique vertex " + std::to_string(v) + " out of range");
        }
        in_set[v] = true;
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!g.adjacent(members[i], members[j])) return false;
        }
    }
    // Extendable by any outside vertex adjacent to every member.
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (in_set[w]) continue;
        bool extends = true;
        for (int v : members) {
            if (!g.adjacent(w, v)) {
                extends = false;
                break;
            }
        }
        if (extends) return false;
    }
    return true;
}

int max_clique_size_brute(const DependencyGraph& g) {
    const int n = g.vertex_count();
    if (n > kCliqueBudget) {
        throw CapacityError("max_clique_size_brute: graph exceeds " +
                            std::to_string(kCliqueBudget) + " vertices");
    }
    if (n == 0) return 0;
    const auto masks = neighbor_masks(g);
    int best = 0;
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        bool clique = true;
        for (int v = 0; v < n && clique; ++v) {
            if (!(subset & (1u << v))) continue;
            if ((masks[v] & subset) != (subset & ~(1u << v))) clique = false;
        }
        if (clique) best = std::max(best, std::popcount(subset));
    }
    return best;
}

std::vector<int> degree_ordering(const DependencyGraph& g) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::vector<int> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    std::sort(order.begin(), order.end(), [&deg](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    return order;
}

Coloring greedy_color(const DependencyGraph& g) {
    const int n = g.vertex_count();
    Coloring result;
    result.assignment.assign(n, -1);
    const auto order = degree_ordering(g);
    std::vector<bool> taken(n, false);
    for (int v : order) {
        std::fill(taken.begin(), taken.end(), false);
        for (int w = 0; w < n; ++w) {
            if (g.adjacent(v, w) && result.assignment[w] >= 0) {
                taken[result.assignment[w]] = true;
            }
        }
        int color = 0;
        while (taken[color]) ++color;
        result.assignment[v] = color;
        result.colors_used = std::max(result.colors_used, color + 1);
    }
    return result;
}

int earlier_neighbors(const DependencyGraph& g, const std::vector<int>& ordering,
                      int position) {
    if (position < 0 || static_cast<std::size_t>(position) >= ordering.size()) {
        throw InputError("position " + std::to_string(position) + " out of range");
    }
    for (int v : ordering) {
        if (v < 0 || v >= g.vertex_count()) {
            throw InputError("ordering vertex " + std::to_string(v) + " out of range");
        }
    }
    const int v = ordering[position];
    int count = 0;
    for (int i = 0; i < position; ++i) {
        if (g.adjacent(v, ordering[i])) ++count;
    }
    return count;
}

int chromatic_number_brute(const DependencyGraph& g) {
    const int n = g.vertex_count();
    if (n > kChromaticBudget) {
        throw CapacityError("chromatic_number_brute: graph exceeds " +
                            std::to_string(kChromaticBudget) + " vertices");
    }
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        if (colorable_with(g, k)) return k;
    }
    return n;
}

bool is_perfect_brute(const DependencyGraph& g) {
    const int n = g.vertex_count();
    if (n > kPerfectBudget) {
        throw CapacityError("is_perfect_brute: graph exceeds " +
                            std::to_string(kPerfectBudget) + " vertices");
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const DependencyGraph sub = induced_subgraph(g, mask);
        if (chromatic_number_brute(sub) != max_clique_size_brute(sub)) return false;
    }
    return true;
}

namespace {

std::int64_t checked_multiply(std::int64_t a, std::int64_t b) {
    std::int64_t result = 0;
    if (__builtin_mul_overflow(a, b, &result)) {
        throw CapacityError("coloring count exceeds the 64-bit range");
    }
    return result;
}

}  // namespace

std::int64_t chromatic_poly_complete(int u, int k) {
    if (u < 0) throw InputError("vertex count must be non-negative");
    if (k < 0) throw InputError("color count must be non-negative");
    std::int64_t product = 1;
    for (int n = 1; n <= u; ++n) {
        const std::int64_t factor = static_cast<std::int64_t>(k) - n + 1;
        if (factor <= 0) return 0;
        product = checked_multiply(product, factor);
    }
    return product;
}

std::int64_t chromatic_poly_layered_partite(int n, int k) {
    if (n < 1) throw InputError("layer count must be positive");
    if (k < 1) throw InputError("color count must be positive");
    std::int64_t product = k;
    for (int i = 1; i < n; ++i) product = checked_multiply(product, k - 1);
    return product;
}

}  // namespace sliceweaver
