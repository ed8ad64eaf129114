#pragma once

#include <string>
#include <vector>

#include "theta/level_tree.hpp"

namespace theta {

/**
 * Graded set X_0..X_n with source/target maps X_k -> X_{k-1}.
 *
 * cells[k] holds path-based ids; source[k][i] and target[k][i] index into
 * cells[k-1] (source[0] and target[0] are empty).
 */
struct NGraph {
    int n = 0;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::vector<int>> source;
    std::vector<std::vector<int>> target;

    int cell_count(int k) const { return static_cast<int>(cells.at(static_cast<std::size_t>(k)).size()); }
};

/**
 * Star construction: the k-cells are the sectors of the height-k vertices
 * (a vertex with r incoming edges has r+1 sectors). Cell ids are "p/j" with p
 * the dot-joined vertex path and j the sector index.
 *
 * Throws ArgumentError if height(t) > n.
 */
NGraph star(const LevelTree& t, int n);

/// ss = st and ts = tt in every dimension >= 2.
bool satisfies_globular(const NGraph& g);

/// The order generated by s(x) <= x <= t(x) over all cells is a total order.
bool generates_total_order(const NGraph& g);

}  // namespace theta
