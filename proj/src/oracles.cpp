#include "sliceweaver/oracles.hpp"

#include <cmath>
#include <vector>

#include "sliceweaver/errors.hpp"

namespace sliceweaver {

namespace {

std::int64_t count_extensions(const DependencyGraph& g, std::vector<int>& colors,
                              int vertex, int k) {
    if (vertex == g.vertex_count()) return 1;
    std::int64_t total = 0;
    for (int c = 0; c < k; ++c) {
        bool clash = false;
        for (int w = 0; w < vertex; ++w) {
            if (colors[w] == c && g.adjacent(vertex, w)) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        colors[vertex] = c;
        total += count_extensions(g, colors, vertex + 1, k);
        colors[vertex] = -1;
    }
    return total;
}

}  // namespace

std::int64_t count_proper_colorings(const DependencyGraph& g, int k) {
    if (k < 0) throw InputError("count_proper_colorings: k must be non-negative");
    if (g.vertex_count() > 16) {
        throw CapacityError("count_proper_colorings: graph exceeds 16 vertices");
    }
    std::vector<int> colors(g.vertex_count(), -1);
    return count_extensions(g, colors, 0, k);
}

std::int64_t count_path_block_colorings(int n, int k) {
    if (n < 1) throw InputError("count_path_block_colorings: n must be positive");
    if (k < 0) throw InputError("count_path_block_colorings: k must be non-negative");
    if (n > 12 || k > 8) {
        throw CapacityError("count_path_block_colorings: enumeration too large");
    }
    if (k == 0) return 0;
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::int64_t count = 0;
    while (true) {
        bool proper = true;
        for (int i = 1; i < n; ++i) {
            if (digits[static_cast<std::size_t>(i)] == digits[static_cast<std::size_t>(i - 1)]) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        int pos = 0;
        while (pos < n && ++digits[static_cast<std::size_t>(pos)] == k) {
            digits[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return count;
}

GridArgmax dense_grid_argmax(const std::function<double(double)>& f, double lo,
                             double hi, int points) {
    if (!(lo <= hi)) throw InputError("dense_grid_argmax: empty range");
    if (points < 1) throw InputError("dense_grid_argmax: need at least one point");
    GridArgmax best{lo, f(lo)};
    for (int j = 1; j < points; ++j) {
        const double x = lo + (hi - lo) * j / (points - 1);
        const double value = f(x);
        if (value > best.value) best = {x, value};
    }
    return best;
}

double integrate_simpson(const std::function<double(double)>& f, double lo,
                         double hi, int intervals) {
    if (!(lo <= hi)) throw InputError("integrate_simpson: empty range");
    if (intervals < 2) throw InputError("integrate_simpson: need at least 2 intervals");
    if (intervals % 2 != 0) ++intervals;
    const double h = (hi - lo) / intervals;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < intervals; ++i) {
        sum += f(lo + h * i) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return sum * h / 3.0;
}

}  // namespace sliceweaver
