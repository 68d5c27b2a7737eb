#pragma once

#include <cstdint>
#include <functional>

#include "sliceweaver/graph.hpp"

namespace sliceweaver {

/// Exhaustive count of proper k-colorings (depth-first over assignments,
/// improper branches cut early). Independent of any closed-form polynomial.
std::int64_t count_proper_colorings(const DependencyGraph& g, int k);

/// Exhaustive count of k-colorings of an n-vertex path where consecutive
/// vertices differ; equivalently, block colorings of an n-layer chain.
std::int64_t count_path_block_colorings(int n, int k);

struct GridArgmax {
    double x = 0;
    double value = 0;
};

/// Argmax of f over an inclusive uniform grid; first strict maximum wins.
GridArgmax dense_grid_argmax(const std::function<double(double)>& f, double lo,
                             double hi, int points);

/// Composite Simpson quadrature (intervals rounded up to even).
double integrate_simpson(const std::function<double(double)>& f, double lo,
                         double hi, int intervals);

}  // namespace sliceweaver
